#include <etacong/arith.hpp>

#include <algorithm>
#include <stdexcept>

namespace etacong
{

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("prime_divisors: argument must be positive");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("divisors: argument must be positive");
    }
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer squarefree_part(const Integer &n)
{
    if (sgn(n) == 0) {
        throw std::invalid_argument("squarefree_part: argument must be nonzero");
    }
    Integer rest = abs(n);
    Integer out = 1;
    Integer p = 2;
    // Trial division; arguments here are products of a level's divisors.
    while (p * p <= rest) {
        int multiplicity = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++multiplicity;
        }
        if (multiplicity % 2 == 1) {
            out *= p;
        }
        ++p;
    }
    out *= rest;
    return sgn(n) < 0 ? Integer(-out) : out;
}

} // namespace etacong
