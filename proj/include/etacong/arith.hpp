#ifndef ETACONG_ARITH_HPP
#define ETACONG_ARITH_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace etacong
{

using Integer = mpz_class;
using Rational = mpq_class;

// Small-integer helpers. Levels, divisors and primes in this library are
// machine integers; only series coefficients and characters need bignums.

bool is_prime(std::int64_t n);

// Distinct prime divisors of n >= 1, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

// All positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Floor and ceiling division with a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    const auto q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    const auto q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

// Squarefree part of |n| times the sign of n, n != 0.
Integer squarefree_part(const Integer &n);

} // namespace etacong

#endif
