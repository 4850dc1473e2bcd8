#ifndef ETACONG_ETA_QUOTIENT_HPP
#define ETACONG_ETA_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <etacong/arith.hpp>
#include <etacong/series.hpp>

namespace etacong
{

// prod_{delta | N} eta(delta z)^{r_delta} on Gamma0(N).
//
// Only nonzero exponents are stored; every key divides the level and at
// least one exponent is nonzero.
class EtaQuotient
{
public:
    using Exponents = std::map<std::int64_t, std::int64_t>;

    EtaQuotient(std::int64_t level, const Exponents &exponents);

    std::int64_t level() const noexcept
    {
        return level_;
    }
    const Exponents &exponents() const noexcept
    {
        return exponents_;
    }
    std::int64_t exponent(std::int64_t delta) const;

    // Same quotient with every exponent negated.
    EtaQuotient inverse() const;

    // Canonical EtaSpec text, e.g. "N=56; 1:-3 2:1 7:9 14:-1".
    std::string to_spec() const;

    friend bool operator==(const EtaQuotient &, const EtaQuotient &) = default;

private:
    std::int64_t level_;
    Exponents exponents_;
};

// Exponents add; the level of the product is the lcm of the two levels.
EtaQuotient operator*(const EtaQuotient &a, const EtaQuotient &b);

// The mod-24 and weight conditions under which an eta-quotient is a weakly
// holomorphic modular form on Gamma0(N).
struct ModularityConditions {
    std::int64_t weight_twice = 0;           // sum r_delta
    std::int64_t sum_delta_r = 0;            // sum delta r_delta
    std::int64_t sum_level_over_delta_r = 0; // sum (N/delta) r_delta
    bool condition_24_a = false;
    bool condition_24_b = false;
    bool weight_integral = false;

    bool satisfied() const noexcept
    {
        return condition_24_a && condition_24_b && weight_integral;
    }
    Rational weight() const
    {
        Rational k(weight_twice, 2);
        k.canonicalize();
        return k;
    }
};

// chi(d) = ((-1)^k s / d) with s = prod delta^{r_delta}.
struct CharacterData {
    Rational s; // lowest terms, positive
    int weight_parity = 0;
    // Squarefree part of (-1)^k * num(s) * den(s); identifies chi. A value
    // of -1 means chi(d) = (-1/d).
    Integer discriminant;

    // chi(d) as a Kronecker symbol; meaningful for d coprime to the level.
    int value(const Integer &d) const;
};

struct ModularityReport {
    ModularityConditions conditions;
    std::optional<CharacterData> character; // absent for half-integral weight
    std::map<std::int64_t, Rational> cusp_orders;
    bool holomorphic_at_all_cusps = false;
};

Rational weight(const EtaQuotient &eq);
ModularityConditions check_gnh_conditions(const EtaQuotient &eq);

// sum delta r_delta / 24. Throws std::domain_error when not integral.
std::int64_t leading_exponent(const EtaQuotient &eq);

// Throws std::domain_error for half-integral weight.
CharacterData character_discriminant(const EtaQuotient &eq);

// Kronecker symbol (a/n) for all integers a, n.
int kronecker_symbol(const Integer &a, const Integer &n);

// Order of vanishing at a cusp c/d of Gamma0(N):
//   (N/24) sum_delta gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta).
// The value does not depend on c. d must divide N.
Rational cusp_order(const EtaQuotient &eq, std::int64_t d);

ModularityReport holomorphy_report(const EtaQuotient &eq);

// q^{leading_exponent} prod_delta prod_n (1 - q^{delta n})^{r_delta}, known
// up to q^trunc, over the integers.
TruncatedSeries expand(const EtaQuotient &eq, Exponent trunc);

} // namespace etacong

#endif
