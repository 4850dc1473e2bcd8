#ifndef ETACONG_SERIES_HPP
#define ETACONG_SERIES_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include <etacong/arith.hpp>

namespace etacong
{

using Exponent = std::int64_t;
using Residue = std::uint64_t;

// Coefficient ring of a series: the integers, or Z/MZ with M >= 2.
class CoefficientDomain
{
public:
    static CoefficientDomain exact() noexcept
    {
        return CoefficientDomain{};
    }
    static CoefficientDomain modular(std::int64_t modulus);

    bool is_exact() const noexcept
    {
        return modulus_ == 0;
    }
    // 0 for the exact domain.
    Residue modulus() const noexcept
    {
        return modulus_;
    }

    friend bool operator==(const CoefficientDomain &, const CoefficientDomain &) = default;

private:
    Residue modulus_ = 0;
};

std::ostream &operator<<(std::ostream &, const CoefficientDomain &);

// A formal power series q^lead * (a(lead) + a(lead+1) q + ...) known exactly
// up to and including the exponent trunc. Coefficients above trunc are
// unknown, and asking for them is an error.
//
// Exact coefficients are GMP integers; residues are single words in [0, M).
// The all-zero series has lead min(0, trunc).
class TruncatedSeries
{
public:
    using ExactStorage = std::vector<Integer>;
    using ResidueStorage = std::vector<Residue>;

    static TruncatedSeries from_coeffs(Exponent lead, const std::vector<Integer> &coeffs,
                                       CoefficientDomain domain = CoefficientDomain::exact());
    static TruncatedSeries zero(Exponent trunc, CoefficientDomain domain = CoefficientDomain::exact());
    static TruncatedSeries one(Exponent trunc, CoefficientDomain domain = CoefficientDomain::exact());
    // c * q^e, known up to trunc >= e.
    static TruncatedSeries monomial(const Integer &c, Exponent e, Exponent trunc,
                                    CoefficientDomain domain = CoefficientDomain::exact());

    const CoefficientDomain &domain() const noexcept
    {
        return domain_;
    }
    Exponent lead() const noexcept
    {
        return lead_;
    }
    Exponent trunc() const noexcept
    {
        return trunc_;
    }
    std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(trunc_ - lead_ + 1);
    }

    // Coefficient of q^n. Zero below lead; throws std::out_of_range above trunc.
    Integer coeff(Exponent n) const;
    // Exponent of the first nonzero stored coefficient.
    std::optional<Exponent> valuation() const;
    bool is_zero() const
    {
        return !valuation().has_value();
    }

    // Same series with a lower truncation order; new_trunc must not exceed trunc().
    TruncatedSeries truncated(Exponent new_trunc) const;

    const ExactStorage &exact_coeffs() const;
    const ResidueStorage &residues() const;

private:
    TruncatedSeries(CoefficientDomain domain, Exponent lead, std::variant<ExactStorage, ResidueStorage> coeffs);
    void normalize();

    CoefficientDomain domain_;
    Exponent lead_ = 0;
    Exponent trunc_ = 0;
    std::variant<ExactStorage, ResidueStorage> coeffs_;

    friend struct SeriesAccess;
};

// Equality up to the smaller truncation order; false on domain mismatch.
bool operator==(const TruncatedSeries &, const TruncatedSeries &);
// Equality of all coefficients with exponent <= upto. Throws if upto exceeds
// either truncation order or the domains differ.
bool equal_up_to(const TruncatedSeries &f, const TruncatedSeries &g, Exponent upto);

std::ostream &operator<<(std::ostream &, const TruncatedSeries &);

// Ring operations. Binary operations require identical domains
// (std::invalid_argument otherwise).
TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries negate(const TruncatedSeries &f);
TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries scalar_mul(const Integer &c, const TruncatedSeries &f);

// Multiplicative inverse. The lowest nonzero coefficient must be a unit
// (std::domain_error otherwise).
TruncatedSeries invert(const TruncatedSeries &f);
TruncatedSeries pow_int(const TruncatedSeries &f, std::int64_t e);

// Multiplication by q^k.
TruncatedSeries shift(const TruncatedSeries &f, Exponent k);

// q -> q^m. The result is known up to m*(trunc+1)-1, capped at cap if given.
TruncatedSeries dilate(const TruncatedSeries &f, std::int64_t m, std::optional<Exponent> cap = std::nullopt);

// sum a(p n) q^n over p n >= lead. p must be prime.
TruncatedSeries u_p(const TruncatedSeries &f, std::int64_t p);

TruncatedSeries reduce_mod(const TruncatedSeries &f, std::int64_t modulus);

// Smallest n <= trunc with a(n) != 0 mod M, or nullopt when every stored
// coefficient vanishes mod M.
std::optional<Exponent> ord_m(const TruncatedSeries &f, std::int64_t modulus);

inline TruncatedSeries operator+(const TruncatedSeries &f, const TruncatedSeries &g)
{
    return add(f, g);
}
inline TruncatedSeries operator-(const TruncatedSeries &f, const TruncatedSeries &g)
{
    return sub(f, g);
}
inline TruncatedSeries operator-(const TruncatedSeries &f)
{
    return negate(f);
}
inline TruncatedSeries operator*(const TruncatedSeries &f, const TruncatedSeries &g)
{
    return mul(f, g);
}
inline TruncatedSeries operator*(const Integer &c, const TruncatedSeries &f)
{
    return scalar_mul(c, f);
}

// sum_{j in Z} (-1)^j q^{j(3j-1)/2} = prod_{n>=1} (1 - q^n), up to trunc.
TruncatedSeries pentagonal_series(Exponent trunc);

// prod_{n>=1} (1 - q^{delta n})^r up to trunc, over the integers. The
// q^{delta r / 24} prefix of eta is not included.
TruncatedSeries eta_euler_factor(std::int64_t delta, std::int64_t r, Exponent trunc);

} // namespace etacong

#endif
