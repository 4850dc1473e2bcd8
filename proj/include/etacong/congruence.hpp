#ifndef ETACONG_CONGRUENCE_HPP
#define ETACONG_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <etacong/eta_spec.hpp>
#include <etacong/series.hpp>

namespace etacong
{

struct SturmData {
    std::int64_t weight = 0;
    std::int64_t level = 0;
    std::int64_t index = 0; // [SL2(Z) : Gamma0(N)]
    std::int64_t bound = 0; // 1 + k * index / 12
};

// N * prod_{p | N} (1 + 1/p).
std::int64_t index_gamma0(std::int64_t level);

// Throws std::domain_error when k * index / 12 is not an integer.
SturmData sturm_bound(std::int64_t weight, std::int64_t level);

// 1 + 240 sum sigma_3(n) q^n.
TruncatedSeries e4_series(Exponent trunc);

struct Mismatch {
    Exponent n = 0;
    Integer lhs; // residues mod the certificate modulus
    Integer rhs;
};

struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct CongruenceCertificate {
    std::int64_t modulus = 0;
    std::int64_t bound_used = 0;
    std::int64_t terms_checked = 0;
    std::optional<Mismatch> first_mismatch;
    bool verdict = false;
    std::string description;
    // Auxiliary identities established while building the two sides.
    std::vector<NamedCheck> checks;
};

// Raised by the built-in certificate pipelines when an identity that must hold exactly
// (or by Frobenius) fails. This signals a bug, not a mathematical result.
class ChainIdentityError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Compares lhs and rhs mod M for every n from min(0, leads) to depth, where
// depth defaults to bound. Throws std::out_of_range if either side is not
// known that far, std::invalid_argument if depth < bound.
CongruenceCertificate verify_congruence(const TruncatedSeries &lhs, const TruncatedSeries &rhs, std::int64_t modulus,
                                        std::int64_t bound, std::optional<Exponent> depth = std::nullopt,
                                        std::string description = {});

inline constexpr Exponent default_depth_delta3 = 200;
inline constexpr Exponent default_depth_delta5 = 488;

// prod (1-q^n)^4 (1-q^{2n})^6 == 6 sum Delta_3(7n+5) q^n (mod 7), certified
// through the level-56 weight-3 forms
//   G = eta^6(2z) eta^2(7z) / eta^2(z)  and  F = eta(2z) eta^9(7z) / (eta^3(z) eta(14z))
// as G == 6 F|U_7 (mod 7), checked to max(depth, 25).
CongruenceCertificate verify_delta3_mod7(Exponent depth = default_depth_delta3);

// E4(q^2) prod (1-q^n)^8 (1-q^{2n})^2 == 8 sum Delta_5(11n+6) q^n (mod 11),
// certified through level-88 weight-5 forms as L1 + 2^8 L2 == 8 H|U_11
// (mod 11), checked to max(depth, 61).
CongruenceCertificate verify_delta5_mod11(Exponent depth = default_depth_delta5);

struct GeneralQuery {
    EtaExpression lhs;
    EtaExpression rhs;
    std::optional<std::int64_t> prime; // U_p applied to lhs
    std::int64_t modulus = 0;
    std::int64_t weight = 0;
    std::int64_t level = 0;
    Exponent depth = 0; // 0: just the Sturm bound
};

// Expands both sides, applies U_p to lhs if requested, and checks the
// congruence up to the Sturm bound for (weight, level). Every term must
// have that weight and a level dividing it.
CongruenceCertificate verify_general(const GeneralQuery &query);

// Flat key=value lines with stable field names.
std::string to_machine(const CongruenceCertificate &cert);
std::string to_text(const CongruenceCertificate &cert);

} // namespace etacong

#endif
