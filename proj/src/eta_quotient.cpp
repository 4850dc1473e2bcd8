#include <etacong/eta_quotient.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace etacong
{

EtaQuotient::EtaQuotient(std::int64_t level, const Exponents &exponents) : level_(level)
{
    if (level < 1) {
        throw std::invalid_argument("eta-quotient level must be positive, got " + std::to_string(level));
    }
    for (const auto &[delta, r] : exponents) {
        if (delta < 1 || level % delta != 0) {
            throw std::invalid_argument("eta-quotient: " + std::to_string(delta) + " does not divide the level "
                                        + std::to_string(level));
        }
        if (r != 0) {
            exponents_.emplace(delta, r);
        }
    }
    if (exponents_.empty()) {
        throw std::invalid_argument("eta-quotient: all exponents are zero");
    }
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const
{
    const auto it = exponents_.find(delta);
    return it == exponents_.end() ? 0 : it->second;
}

EtaQuotient EtaQuotient::inverse() const
{
    Exponents neg;
    for (const auto &[delta, r] : exponents_) {
        neg.emplace(delta, -r);
    }
    return EtaQuotient(level_, neg);
}

std::string EtaQuotient::to_spec() const
{
    std::ostringstream oss;
    oss << "N=" << level_ << ";";
    for (const auto &[delta, r] : exponents_) {
        oss << " " << delta << ":" << r;
    }
    return oss.str();
}

EtaQuotient operator*(const EtaQuotient &a, const EtaQuotient &b)
{
    auto exps = a.exponents();
    for (const auto &[delta, r] : b.exponents()) {
        exps[delta] += r;
    }
    return EtaQuotient(std::lcm(a.level(), b.level()), exps);
}

int CharacterData::value(const Integer &d) const
{
    return kronecker_symbol(discriminant, d);
}

Rational weight(const EtaQuotient &eq)
{
    return check_gnh_conditions(eq).weight();
}

ModularityConditions check_gnh_conditions(const EtaQuotient &eq)
{
    ModularityConditions c;
    const auto n = eq.level();
    for (const auto &[delta, r] : eq.exponents()) {
        c.weight_twice += r;
        c.sum_delta_r += delta * r;
        c.sum_level_over_delta_r += (n / delta) * r;
    }
    c.condition_24_a = c.sum_delta_r % 24 == 0;
    c.condition_24_b = c.sum_level_over_delta_r % 24 == 0;
    c.weight_integral = c.weight_twice % 2 == 0;
    return c;
}

std::int64_t leading_exponent(const EtaQuotient &eq)
{
    const auto c = check_gnh_conditions(eq);
    if (!c.condition_24_a) {
        throw std::domain_error("eta-quotient " + eq.to_spec() + ": sum of delta*r_delta = "
                                + std::to_string(c.sum_delta_r)
                                + " is not divisible by 24; fractional q-powers are not supported");
    }
    return c.sum_delta_r / 24;
}

CharacterData character_discriminant(const EtaQuotient &eq)
{
    const auto c = check_gnh_conditions(eq);
    if (!c.weight_integral) {
        throw std::domain_error("eta-quotient " + eq.to_spec() + " has half-integral weight");
    }
    Integer num = 1, den = 1;
    for (const auto &[delta, r] : eq.exponents()) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(delta), static_cast<unsigned long>(r < 0 ? -r : r));
        (r > 0 ? num : den) *= power;
    }
    CharacterData out;
    out.s = Rational(num, den);
    out.s.canonicalize();
    out.weight_parity = static_cast<int>(((c.weight_twice / 2) % 2 + 2) % 2);
    const Integer signed_product = (out.weight_parity == 1 ? -1 : 1) * out.s.get_num() * out.s.get_den();
    out.discriminant = squarefree_part(signed_product);
    return out;
}

int kronecker_symbol(const Integer &a, const Integer &n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Rational cusp_order(const EtaQuotient &eq, std::int64_t d)
{
    const auto n = eq.level();
    if (d < 1 || n % d != 0) {
        throw std::invalid_argument("cusp_order: " + std::to_string(d) + " does not divide the level "
                                    + std::to_string(n));
    }
    Rational sum = 0;
    const auto g = std::gcd(d, n / d);
    for (const auto &[delta, r] : eq.exponents()) {
        const auto gd = std::gcd(d, delta);
        sum += Rational(Integer(gd * gd) * r, Integer(g) * d * delta);
    }
    Rational out = Rational(n, 24) * sum;
    out.canonicalize();
    return out;
}

ModularityReport holomorphy_report(const EtaQuotient &eq)
{
    ModularityReport report;
    report.conditions = check_gnh_conditions(eq);
    if (report.conditions.weight_integral) {
        report.character = character_discriminant(eq);
    }
    report.holomorphic_at_all_cusps = true;
    for (const auto d : divisors(eq.level())) {
        const auto order = cusp_order(eq, d);
        if (sgn(order) < 0) {
            report.holomorphic_at_all_cusps = false;
        }
        report.cusp_orders.emplace(d, order);
    }
    return report;
}

TruncatedSeries expand(const EtaQuotient &eq, Exponent trunc)
{
    const auto lead = leading_exponent(eq);
    const Exponent work = trunc - lead;
    if (work < 0) {
        return TruncatedSeries::zero(trunc);
    }
    auto product = TruncatedSeries::one(work);
    for (const auto &[delta, r] : eq.exponents()) {
        product = mul(product, eta_euler_factor(delta, r, work));
    }
    return shift(product, lead);
}

} // namespace etacong
