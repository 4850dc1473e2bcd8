#include <etacong/partitions.hpp>

#include <stdexcept>
#include <string>

namespace etacong
{

namespace
{

TruncatedSeries build_gf(std::int64_t k, Exponent trunc)
{
    if (k < 1) {
        throw std::invalid_argument("broken diamond family: k must be positive, got " + std::to_string(k));
    }
    if (trunc < 0) {
        throw std::invalid_argument("broken diamond family: truncation order must be nonnegative");
    }
    auto gf = eta_euler_factor(1, -3, trunc);
    gf = mul(gf, eta_euler_factor(2, 1, trunc));
    gf = mul(gf, eta_euler_factor(2 * k + 1, 1, trunc));
    return mul(gf, eta_euler_factor(4 * k + 2, -1, trunc));
}

} // namespace

BrokenDiamondFamily::BrokenDiamondFamily(std::int64_t k, Exponent trunc) : k_(k), gf_(build_gf(k, trunc)) {}

Integer delta_coeff(const BrokenDiamondFamily &fam, Exponent n)
{
    if (n < 0 || n > fam.trunc()) {
        throw std::out_of_range("Delta_" + std::to_string(fam.k()) + "(" + std::to_string(n)
                                + ") is outside the computed range 0.." + std::to_string(fam.trunc()));
    }
    return fam.gf().coeff(n);
}

TruncatedSeries progression_series(const BrokenDiamondFamily &fam, std::int64_t p, std::int64_t r)
{
    if (p < 1 || r < 0 || r >= p) {
        throw std::invalid_argument("progression_series: need p >= 1 and 0 <= r < p");
    }
    if (fam.trunc() < r) {
        throw std::out_of_range("progression_series: progression " + std::to_string(p) + "n+" + std::to_string(r)
                                + " is empty below truncation order " + std::to_string(fam.trunc()));
    }
    const Exponent trunc = (fam.trunc() - r) / p;
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(trunc + 1));
    for (Exponent n = 0; n <= trunc; ++n) {
        coeffs.push_back(fam.gf().coeff(p * n + r));
    }
    return TruncatedSeries::from_coeffs(0, coeffs);
}

} // namespace etacong
