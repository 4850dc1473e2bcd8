#include <etacong/congruence.hpp>

#include <algorithm>
#include <sstream>

#include <etacong/arith.hpp>
#include <etacong/eta_quotient.hpp>
#include <etacong/partitions.hpp>

namespace etacong
{

std::int64_t index_gamma0(std::int64_t level)
{
    if (level < 1) {
        throw std::invalid_argument("index_gamma0: level must be positive");
    }
    std::int64_t index = level;
    for (const auto p : prime_divisors(level)) {
        index = index / p * (p + 1);
    }
    return index;
}

SturmData sturm_bound(std::int64_t weight, std::int64_t level)
{
    if (weight < 1) {
        throw std::invalid_argument("sturm_bound: weight must be at least 1, got " + std::to_string(weight));
    }
    SturmData out;
    out.weight = weight;
    out.level = level;
    out.index = index_gamma0(level);
    const auto scaled = weight * out.index;
    if (scaled % 12 != 0) {
        throw std::domain_error("sturm_bound: k*[SL2(Z):Gamma0(N)]/12 = " + std::to_string(scaled)
                                + "/12 is not an integer for k=" + std::to_string(weight)
                                + ", N=" + std::to_string(level));
    }
    out.bound = 1 + scaled / 12;
    return out;
}

TruncatedSeries e4_series(Exponent trunc)
{
    if (trunc < 0) {
        throw std::invalid_argument("e4_series: truncation order must be nonnegative");
    }
    const auto len = static_cast<std::size_t>(trunc + 1);
    std::vector<Integer> sigma3(len);
    for (std::size_t d = 1; d < len; ++d) {
        const Integer cube = Integer(static_cast<unsigned long>(d)) * d * d;
        for (std::size_t m = d; m < len; m += d) {
            sigma3[m] += cube;
        }
    }
    sigma3[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        sigma3[n] *= 240;
    }
    return TruncatedSeries::from_coeffs(0, sigma3);
}

namespace
{

Integer residue(const TruncatedSeries &f, Exponent n, std::int64_t modulus)
{
    Integer r;
    const Integer c = f.coeff(n);
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(modulus));
    return r;
}

void check_residue_domain(const TruncatedSeries &f, std::int64_t modulus)
{
    if (!f.domain().is_exact() && f.domain().modulus() % static_cast<Residue>(modulus) != 0) {
        throw std::invalid_argument("verify_congruence: series residues are not defined mod "
                                    + std::to_string(modulus));
    }
}

// Records a named identity; failure of any of these is a bug.
void require(std::vector<NamedCheck> &checks, const std::string &name, bool holds)
{
    if (!holds) {
        throw ChainIdentityError("identity '" + name + "' failed");
    }
    checks.push_back(NamedCheck{name, true});
}

bool congruent_up_to(const TruncatedSeries &f, const TruncatedSeries &g, std::int64_t modulus, Exponent upto)
{
    return equal_up_to(reduce_mod(f, modulus), reduce_mod(g, modulus), upto);
}

CongruenceCertificate combine(CongruenceCertificate main, const CongruenceCertificate &original_form,
                              std::vector<NamedCheck> checks)
{
    if (!main.verdict) {
        return main;
    }
    if (!original_form.verdict) {
        return original_form;
    }
    checks.push_back(NamedCheck{"original_form", true});
    main.checks = std::move(checks);
    return main;
}

} // namespace

CongruenceCertificate verify_congruence(const TruncatedSeries &lhs, const TruncatedSeries &rhs, std::int64_t modulus,
                                        std::int64_t bound, std::optional<Exponent> depth, std::string description)
{
    if (modulus < 2) {
        throw std::invalid_argument("verify_congruence: modulus must be at least 2");
    }
    const Exponent upto = depth.value_or(bound);
    if (upto < bound) {
        throw std::invalid_argument("verify_congruence: depth " + std::to_string(upto) + " is below the bound "
                                    + std::to_string(bound));
    }
    if (lhs.trunc() < upto || rhs.trunc() < upto) {
        throw std::out_of_range("verify_congruence: need both sides to q^" + std::to_string(upto)
                                + ", have lhs to q^" + std::to_string(lhs.trunc()) + " and rhs to q^"
                                + std::to_string(rhs.trunc()));
    }
    check_residue_domain(lhs, modulus);
    check_residue_domain(rhs, modulus);

    CongruenceCertificate cert;
    cert.modulus = modulus;
    cert.bound_used = bound;
    cert.description = std::move(description);
    const Exponent from = std::min({Exponent{0}, lhs.lead(), rhs.lead()});
    for (Exponent n = from; n <= upto; ++n) {
        auto a = residue(lhs, n, modulus);
        auto b = residue(rhs, n, modulus);
        ++cert.terms_checked;
        if (a != b) {
            cert.first_mismatch = Mismatch{n, std::move(a), std::move(b)};
            break;
        }
    }
    cert.verdict = !cert.first_mismatch && cert.terms_checked >= cert.bound_used;
    return cert;
}

CongruenceCertificate verify_delta3_mod7(Exponent depth)
{
    const auto sturm = sturm_bound(3, 56);
    const Exponent t = std::max<Exponent>(depth, sturm.bound);
    const EtaQuotient f_quot(56, {{1, -3}, {2, 1}, {7, 9}, {14, -1}});
    const EtaQuotient g_quot(56, {{1, -2}, {2, 6}, {7, 2}});

    const auto f = expand(f_quot, 7 * t + 6);
    const auto f_u7 = u_p(f, 7);
    const auto g = expand(g_quot, t);
    const BrokenDiamondFamily family(3, 7 * t + 6);
    const auto progression = progression_series(family, 7, 5);

    std::vector<NamedCheck> checks;
    // F = q^2 (sum Delta_3(n) q^n) prod (1-q^{7n})^8
    require(checks, "factorization_exact",
            equal_up_to(f, shift(mul(family.gf(), eta_euler_factor(7, 8, 7 * t + 4)), 2), 7 * t + 6));
    // F|U_7 = q (sum Delta_3(7n+5) q^n) prod (1-q^n)^8
    require(checks, "u7_sifting_exact", equal_up_to(f_u7, shift(mul(progression, eta_euler_factor(1, 8, t)), 1), t));
    require(checks, "g_factorization_exact",
            equal_up_to(g,
                        mul(expand(EtaQuotient(56, {{1, 12}, {2, 6}}), t),
                            expand(EtaQuotient(56, {{1, -14}, {7, 2}}), t)),
                        t));
    require(checks, "frobenius_mod7",
            congruent_up_to(mul(eta_euler_factor(7, 2, t), eta_euler_factor(1, -14, t)), TruncatedSeries::one(t), 7,
                            t));
    require(checks, "g_reduction_mod7",
            congruent_up_to(g, shift(mul(eta_euler_factor(1, 12, t), eta_euler_factor(2, 6, t)), 1), 7, t));

    auto main = verify_congruence(g, scalar_mul(6, f_u7), 7, sturm.bound, t,
                                  "eta^6(2z) eta^2(7z) / eta^2(z) == 6 * (eta(2z) eta^9(7z) / (eta^3(z) eta(14z)))|U_7"
                                  " (mod 7) on Gamma0(56), weight 3");
    const auto original =
        verify_congruence(mul(eta_euler_factor(1, 4, t), eta_euler_factor(2, 6, t)), scalar_mul(6, progression), 7,
                          sturm.bound, t, "prod (1-q^n)^4 (1-q^{2n})^6 == 6 sum Delta_3(7n+5) q^n (mod 7)");
    return combine(std::move(main), original, std::move(checks));
}

CongruenceCertificate verify_delta5_mod11(Exponent depth)
{
    const auto sturm = sturm_bound(5, 88);
    const Exponent t = std::max<Exponent>(depth, sturm.bound);
    const EtaQuotient h_quot(88, {{1, -3}, {2, 1}, {11, 13}, {22, -1}});
    const EtaQuotient l1_quot(88, {{1, -2}, {2, 18}, {4, -8}, {11, 2}});
    const EtaQuotient l2_quot(88, {{1, -2}, {2, -6}, {4, 16}, {11, 2}});

    const auto h = expand(h_quot, 11 * t + 10);
    const auto h_u11 = u_p(h, 11);
    const auto l = add(expand(l1_quot, t), scalar_mul(256, expand(l2_quot, t)));
    const BrokenDiamondFamily family(5, 11 * t + 10);
    const auto progression = progression_series(family, 11, 6);
    const auto e4 = e4_series(t);
    const auto e4_q2 = dilate(e4_series(t / 2), 2, t);

    std::vector<NamedCheck> checks;
    // H = q^5 (sum Delta_5(n) q^n) prod (1-q^{11n})^12
    require(checks, "factorization_exact",
            equal_up_to(h, shift(mul(family.gf(), eta_euler_factor(11, 12, 11 * t + 5)), 5), 11 * t + 10));
    // H|U_11 = q (sum Delta_5(11n+6) q^n) prod (1-q^n)^12
    require(checks, "u11_sifting_exact",
            equal_up_to(h_u11, shift(mul(progression, eta_euler_factor(1, 12, t)), 1), t));
    require(checks, "e4_eta_identity_exact",
            equal_up_to(e4,
                        add(expand(EtaQuotient(2, {{1, 16}, {2, -8}}), t),
                            scalar_mul(256, expand(EtaQuotient(2, {{1, -8}, {2, 16}}), t))),
                        t));
    require(checks, "l_factorization_exact",
            equal_up_to(l, mul(e4_q2, expand(EtaQuotient(88, {{1, -2}, {2, 2}, {11, 2}}), t)), t));
    require(checks, "frobenius_mod11",
            congruent_up_to(mul(eta_euler_factor(11, 2, t), eta_euler_factor(1, -22, t)), TruncatedSeries::one(t),
                            11, t));
    require(checks, "l_reduction_mod11",
            congruent_up_to(l, mul(e4_q2, shift(mul(eta_euler_factor(2, 2, t), eta_euler_factor(1, 20, t)), 1)), 11,
                            t));

    auto main = verify_congruence(l, scalar_mul(8, h_u11), 11, sturm.bound, t,
                                  "L1 + 2^8 L2 == 8 * (eta(2z) eta^13(11z) / (eta^3(z) eta(22z)))|U_11 (mod 11) on"
                                  " Gamma0(88), weight 5; L1 = eta^18(2z) eta^2(11z) / (eta^2(z) eta^8(4z)),"
                                  " L2 = eta^16(4z) eta^2(11z) / (eta^6(2z) eta^2(z))");
    const auto original = verify_congruence(
        mul(e4_q2, mul(eta_euler_factor(1, 8, t), eta_euler_factor(2, 2, t))), scalar_mul(8, progression), 11,
        sturm.bound, t, "E4(q^2) prod (1-q^n)^8 (1-q^{2n})^2 == 8 sum Delta_5(11n+6) q^n (mod 11)");
    return combine(std::move(main), original, std::move(checks));
}

CongruenceCertificate verify_general(const GeneralQuery &query)
{
    if (query.lhs.empty() || query.rhs.empty()) {
        throw std::invalid_argument("verify_general: both sides need at least one term");
    }
    if (query.modulus < 2) {
        throw std::invalid_argument("verify_general: modulus must be at least 2");
    }
    const auto sturm = sturm_bound(query.weight, query.level);
    const Rational expected_weight(query.weight);
    for (const auto *side : {&query.lhs, &query.rhs}) {
        for (const auto &term : *side) {
            if (query.level % term.quotient.level() != 0) {
                throw std::invalid_argument("verify_general: level " + std::to_string(term.quotient.level())
                                            + " of [" + term.quotient.to_spec() + "] does not divide "
                                            + std::to_string(query.level));
            }
            if (weight(term.quotient) != expected_weight) {
                throw std::invalid_argument("verify_general: [" + term.quotient.to_spec() + "] has weight "
                                            + weight(term.quotient).get_str() + ", expected "
                                            + std::to_string(query.weight));
            }
        }
    }
    const Exponent t = std::max<Exponent>(query.depth, sturm.bound);

    std::ostringstream desc;
    desc << "(" << to_string(query.lhs) << ")";
    TruncatedSeries lhs = [&] {
        if (query.prime) {
            const auto p = *query.prime;
            desc << "|U_" << p;
            return u_p(expand(query.lhs, p * t + p - 1), p);
        }
        return expand(query.lhs, t);
    }();
    desc << " == " << to_string(query.rhs) << " (mod " << query.modulus << ") on Gamma0(" << query.level
         << "), weight " << query.weight;
    const auto rhs = expand(query.rhs, t);
    return verify_congruence(lhs, rhs, query.modulus, sturm.bound, t, desc.str());
}

std::string to_machine(const CongruenceCertificate &cert)
{
    std::ostringstream oss;
    oss << "modulus=" << cert.modulus << "\n";
    oss << "bound_used=" << cert.bound_used << "\n";
    oss << "terms_checked=" << cert.terms_checked << "\n";
    oss << "verdict=" << (cert.verdict ? "true" : "false") << "\n";
    oss << "first_mismatch=";
    if (cert.first_mismatch) {
        oss << cert.first_mismatch->n << "," << cert.first_mismatch->lhs << "," << cert.first_mismatch->rhs;
    } else {
        oss << "none";
    }
    oss << "\n";
    oss << "description=" << cert.description << "\n";
    for (const auto &c : cert.checks) {
        oss << "check." << c.name << "=" << (c.passed ? "pass" : "fail") << "\n";
    }
    return oss.str();
}

std::string to_text(const CongruenceCertificate &cert)
{
    std::ostringstream oss;
    oss << "Congruence certificate\n";
    oss << "  claim          : " << cert.description << "\n";
    oss << "  modulus        : " << cert.modulus << "\n";
    oss << "  Sturm bound    : " << cert.bound_used << "\n";
    oss << "  terms checked  : " << cert.terms_checked << "\n";
    oss << "  first mismatch : ";
    if (cert.first_mismatch) {
        oss << "n=" << cert.first_mismatch->n << " (lhs " << cert.first_mismatch->lhs << ", rhs "
            << cert.first_mismatch->rhs << ")";
    } else {
        oss << "none";
    }
    oss << "\n";
    oss << "  verdict        : " << (cert.verdict ? "VERIFIED (coefficients agree through the Sturm bound)" : "FAILED")
        << "\n";
    if (!cert.checks.empty()) {
        oss << "  supporting identities:\n";
        for (const auto &c : cert.checks) {
            oss << "    [" << (c.passed ? "pass" : "fail") << "] " << c.name << "\n";
        }
    }
    return oss.str();
}

} // namespace etacong
