#ifndef ETACONG_PARTITIONS_HPP
#define ETACONG_PARTITIONS_HPP

#include <cstdint>

#include <etacong/series.hpp>

namespace etacong
{

// Generating function of broken k-diamond partitions,
//   sum Delta_k(n) q^n = prod (1-q^{2n})(1-q^{(2k+1)n}) / ((1-q^n)^3 (1-q^{(4k+2)n})),
// known up to q^trunc.
class BrokenDiamondFamily
{
public:
    BrokenDiamondFamily(std::int64_t k, Exponent trunc);

    std::int64_t k() const noexcept
    {
        return k_;
    }
    Exponent trunc() const noexcept
    {
        return gf_.trunc();
    }
    const TruncatedSeries &gf() const noexcept
    {
        return gf_;
    }

private:
    std::int64_t k_;
    TruncatedSeries gf_;
};

inline BrokenDiamondFamily broken_diamond_gf(std::int64_t k, Exponent trunc)
{
    return BrokenDiamondFamily(k, trunc);
}

// Delta_k(n); std::out_of_range unless 0 <= n <= trunc.
Integer delta_coeff(const BrokenDiamondFamily &fam, Exponent n);

// sum_{n>=0} Delta_k(p n + r) q^n, known up to floor((trunc - r) / p).
TruncatedSeries progression_series(const BrokenDiamondFamily &fam, std::int64_t p, std::int64_t r);

} // namespace etacong

#endif
