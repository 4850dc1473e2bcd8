#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <etacong/series.hpp>

#include "support/oracles.hpp"

using namespace etacong;

namespace
{

TruncatedSeries S(Exponent lead, std::vector<Integer> c, CoefficientDomain d = CoefficientDomain::exact())
{
    return TruncatedSeries::from_coeffs(lead, c, d);
}

const auto Z7 = CoefficientDomain::modular(7);

} // namespace

TEST_CASE("from_coeffs")
{
    const auto one = S(0, {1});
    CHECK(one.lead() == 0);
    CHECK(one.trunc() == 0);
    CHECK(one.coeff(0) == 1);

    const auto f = S(2, {1, 0, -3});
    CHECK(f.lead() == 2);
    CHECK(f.trunc() == 4);
    CHECK(f.coeff(2) == 1);
    CHECK(f.coeff(3) == 0);
    CHECK(f.coeff(4) == -3);
    CHECK(f.coeff(-10) == 0);
    CHECK_THROWS_AS(f.coeff(5), std::out_of_range);

    const auto g = S(0, {9, 15}, Z7);
    CHECK(g.residues() == std::vector<Residue>{2, 1});
    CHECK(S(0, {-1}, Z7).coeff(0) == 6);

    CHECK_THROWS_AS(CoefficientDomain::modular(1), std::invalid_argument);
    CHECK_THROWS_AS(S(0, {}), std::invalid_argument);
}

TEST_CASE("zero series has lead normalized to 0")
{
    const auto z = S(3, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.lead() == 0);
    CHECK(z.trunc() == 5);
    const auto neg = S(-4, {0, 0});
    CHECK(neg.lead() == -3);
    CHECK(neg.trunc() == -3);
}

TEST_CASE("add")
{
    CHECK(S(0, {1, 1}) + S(0, {1, -1}) == S(0, {2, 0}));
    const auto f = S(1, {3, 4, 5});
    CHECK(f + TruncatedSeries::zero(10) == f);
    const auto sum = S(2, {1}) + S(2, {-1});
    CHECK(sum.is_zero());
    CHECK(sum.lead() == 0);

    // min rules for lead and truncation
    const auto h = S(-1, {1, 2, 3, 4}) + S(1, {5, 6, 7, 8, 9});
    CHECK(h.lead() == -1);
    CHECK(h.trunc() == 2);
    CHECK(h.coeff(1) == 3 + 5);

    CHECK_THROWS_AS(S(0, {1}) + S(0, {1}, Z7), std::invalid_argument);
}

TEST_CASE("mul")
{
    CHECK(S(0, {1, 1, 0}) * S(0, {1, -1, 0}) == S(0, {1, 0, -1}));

    // truncation: min(T_f + lead_g, T_g + lead_f)
    const auto p = S(1, {1, 1, 1}) * S(-2, {1, 0, 0, 0, 0, 0});
    CHECK(p.lead() == -1);
    CHECK(p.trunc() == std::min<Exponent>(3 - 2, 3 + 1));

    // (sum q^n)^2 = sum (n+1) q^n, against the naive convolution oracle.
    const Exponent t = 30;
    const auto geo = S(0, std::vector<Integer>(t + 1, 1));
    const auto sq = geo * geo;
    const auto ref = oracle::naive_product(oracle::to_map(geo), oracle::to_map(geo), t);
    for (Exponent n = 0; n <= t; ++n) {
        CHECK(sq.coeff(n) == n + 1);
        CHECK(sq.coeff(n) == oracle::map_coeff(ref, n));
    }

    CHECK_THROWS_AS(S(0, {1}, CoefficientDomain::modular(5)) * S(0, {1}, Z7), std::invalid_argument);
}

TEST_CASE("scalar_mul")
{
    CHECK(scalar_mul(6, S(0, {1, 1}, Z7)) == S(0, {6, 6}, Z7));
    CHECK(scalar_mul(0, S(0, {4, 5, 6})).is_zero());
    const auto r = scalar_mul(256, S(3, {1}));
    CHECK(r.coeff(3) == 256);
}

TEST_CASE("invert")
{
    const Exponent t = 12;
    std::vector<Integer> one_minus_q(t + 1);
    one_minus_q[0] = 1;
    one_minus_q[1] = -1;
    const auto f = S(0, one_minus_q);
    const auto g = invert(f);
    for (Exponent n = 0; n <= t; ++n) {
        CHECK(g.coeff(n) == 1);
    }
    CHECK(equal_up_to(f * g, TruncatedSeries::one(t), t));

    CHECK(invert(S(0, {1})) == S(0, {1}));

    // q (1 - q): lead -1
    const auto h = invert(S(1, {1, -1, 0, 0, 0}));
    CHECK(h.lead() == -1);
    for (Exponent n = -1; n <= h.trunc(); ++n) {
        CHECK(h.coeff(n) == 1);
    }
    CHECK(h.trunc() == 5 - 2);

    // leading stored zeros are skipped
    const auto padded = S(0, {0, 1, -1, 0, 0}) + TruncatedSeries::zero(4);
    CHECK(invert(padded).lead() == -1);

    CHECK_THROWS_AS(invert(S(0, {2, 1})), std::domain_error);
    CHECK_THROWS_AS(invert(S(0, {0, 0})), std::domain_error);
    CHECK_THROWS_AS(invert(S(0, {7, 1}, CoefficientDomain::modular(14))), std::domain_error);
    CHECK(invert(S(0, {3, 1, 0, 0}, Z7)) * S(0, {3, 1, 0, 0}, Z7) == TruncatedSeries::one(3, Z7));
}

TEST_CASE("pow_int")
{
    CHECK(pow_int(S(0, {1, -1, 0, 0}), 2) == S(0, {1, -2, 1, 0}));
    CHECK(pow_int(S(0, {3, 4, 5}), 0) == TruncatedSeries::one(2));

    // (1 - q)^7 mod 7 = 1 - q^7: Frobenius, checked against binomial coefficients
    std::vector<Integer> c(21);
    c[0] = 1;
    c[1] = -1;
    const auto p7 = pow_int(S(0, c, Z7), 7);
    for (Exponent n = 0; n <= 20; ++n) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), 7, static_cast<unsigned long>(n));
        Integer expected = (n % 2 == 0 ? 1 : -1) * binom;
        CHECK(p7.coeff(n) == Integer((expected % 7 + 7) % 7));
        CHECK(p7.coeff(n) == ((n == 0) ? 1 : (n == 7) ? 6 : 0));
    }

    const auto inv_sq = pow_int(S(0, {1, -1, 0, 0, 0}), -2);
    CHECK(inv_sq == S(0, {1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(pow_int(S(0, {2, 1}), -1), std::domain_error);
}

TEST_CASE("dilate")
{
    const auto d = dilate(S(0, {1, 1}), 2);
    CHECK(d.trunc() == 3);
    CHECK(d == S(0, {1, 0, 1, 0}));

    const auto f = S(-1, {2, 3, 5, 7});
    CHECK(dilate(f, 1) == f);
    CHECK(dilate(f, 1).trunc() == f.trunc());
    const auto twice = dilate(dilate(f, 2), 7);
    const auto once = dilate(f, 14);
    CHECK(twice.trunc() == once.trunc());
    CHECK(twice == once);

    CHECK(dilate(f, 3, 4).trunc() == 4);
    CHECK_THROWS_AS(dilate(f, 0), std::invalid_argument);
}

TEST_CASE("u_p")
{
    // q^3 + 2 q^5 + 4 q^6  ->  q + 4 q^2
    const auto f = S(3, {1, 0, 2, 4});
    const auto g = u_p(f, 3);
    CHECK(g.lead() == 1);
    CHECK(g.trunc() == 2);
    CHECK(g == S(1, {1, 4}));

    CHECK(u_p(S(7, {1}), 7) == S(1, {1}));

    // lead not divisible by p: q^2 + ... keeps a(7), a(14), ... aligned
    std::vector<Integer> c;
    for (int i = 0; i < 20; ++i) {
        c.emplace_back(100 + i); // a(n) = 98 + n
    }
    const auto h = u_p(S(2, c), 7);
    CHECK(h.lead() == 1);
    CHECK(h.trunc() == 21 / 7);
    CHECK(h.coeff(1) == 105);
    CHECK(h.coeff(2) == 112);
    CHECK(h.coeff(3) == 119);

    // negative lead: ceil(-5/2) = -2
    const auto w = u_p(S(-5, {1, 2, 3, 4, 5, 6}), 2);
    CHECK(w.lead() == -2);
    CHECK(w.coeff(-2) == 2);
    CHECK(w.coeff(-1) == 4);
    CHECK(w.coeff(0) == 6);

    CHECK_THROWS_AS(u_p(f, 4), std::invalid_argument);
    CHECK_THROWS_AS(u_p(f, 1), std::invalid_argument);
}

TEST_CASE("reduce_mod and ord_m")
{
    CHECK(reduce_mod(S(0, {0, 7, 0, 1}), 7) == S(0, {0, 0, 0, 1}, Z7));
    CHECK(reduce_mod(TruncatedSeries::zero(3), 11).is_zero());
    CHECK(reduce_mod(S(0, {-1}), 7).coeff(0) == 6);
    CHECK_THROWS_AS(reduce_mod(S(0, {1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod(S(0, {1}, Z7), 7), std::invalid_argument);

    CHECK(ord_m(S(0, {0, 7, 0, 1}), 7) == 3);
    CHECK(ord_m(S(0, {1, 1}), 5) == 0);
    CHECK_FALSE(ord_m(S(0, {7, 14}), 7).has_value());
    CHECK(ord_m(S(0, {1, 2}, CoefficientDomain::modular(14)), 7) == 0);
    CHECK_THROWS_AS(ord_m(S(0, {1}, Z7), 5), std::invalid_argument);
}

TEST_CASE("comparisons beyond truncation are errors")
{
    const auto f = S(0, {1, 2, 3});
    CHECK_THROWS_AS(equal_up_to(f, f, 3), std::out_of_range);
    CHECK_THROWS_AS((void)f.truncated(5), std::out_of_range);
    CHECK(equal_up_to(f, S(0, {1, 2, 4}), 1));
    CHECK_FALSE(equal_up_to(f, S(0, {1, 2, 4}), 2));
}

TEST_CASE("eta_euler_factor")
{
    const auto e = eta_euler_factor(1, 1, 7);
    CHECK(e == S(0, {1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(e == oracle::product_oracle(1, 1, 7));

    CHECK(eta_euler_factor(5, 0, 9) == TruncatedSeries::one(9));

    const auto e2 = eta_euler_factor(2, 1, 6);
    CHECK(e2 == S(0, {1, 0, -1, 0, -1, 0, 0}));
    CHECK(e2 == dilate(eta_euler_factor(1, 1, 6), 2).truncated(6));

    CHECK(eta_euler_factor(1, 1, 50) == oracle::product_oracle(1, 1, 50));
    CHECK(eta_euler_factor(3, -7, 200).trunc() == 200);
}

TEST_CASE("product_oracle self-checks")
{
    const auto p = oracle::product_oracle(1, -1, 5);
    CHECK(p == S(0, {1, 1, 2, 3, 5, 7}));
    for (Exponent n = 0; n <= 5; ++n) {
        CHECK(p.coeff(n) == oracle::count_partitions(n, n));
    }
    CHECK(oracle::product_oracle(1, 24, 0) == S(0, {1}));
}

TEST_CASE("eta_euler_factor agrees with the product oracle")
{
    // Full grid for small orders; the acceptance suite covers T=120 on 1..14.
    for (std::int64_t delta = 1; delta <= 24; ++delta) {
        for (std::int64_t r = -24; r <= 24; r += (delta <= 4 ? 1 : 5)) {
            const Exponent t = delta <= 4 ? 60 : 200;
            INFO("delta=" << delta << " r=" << r);
            CHECK(eta_euler_factor(delta, r, t) == oracle::product_oracle(delta, r, t));
        }
    }
}

TEST_CASE("ring axioms up to truncation")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_series(rng, -3, 3, 12);
        const auto b = oracle::random_series(rng, -3, 3, 10);
        const auto c = oracle::random_series(rng, -3, 3, 14);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        const auto prod = a * b;
        const auto ref = oracle::naive_product(oracle::to_map(a), oracle::to_map(b), prod.trunc());
        for (Exponent n = prod.lead(); n <= prod.trunc(); ++n) {
            CHECK(prod.coeff(n) == oracle::map_coeff(ref, n));
        }
    }
}

TEST_CASE("mul(f, invert(f)) = 1 up to truncation")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = oracle::random_unit_series(rng, 25);
        if (trial % 2 == 1) {
            f = shift(scalar_mul(-1, f), trial % 5 - 2);
        }
        const auto prod = f * invert(f);
        CHECK(prod == TruncatedSeries::one(prod.trunc()));

        const auto fm = reduce_mod(oracle::random_series(rng, 0, 0, 20), 11);
        if (fm.valuation()) {
            const auto pm = fm * invert(fm);
            CHECK(pm == TruncatedSeries::one(pm.trunc(), fm.domain()));
        }
    }
}

TEST_CASE("Frobenius: f^p == f(q^p) mod p")
{
    std::mt19937_64 rng(11);
    for (const std::int64_t p : {2, 3, 5, 7, 11}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = oracle::random_unit_series(rng, 61);
            const auto lhs = reduce_mod(pow_int(f, p), p);
            const auto rhs = reduce_mod(dilate(f, p, 60), p);
            CHECK(equal_up_to(lhs, rhs, 60));
        }
    }
}

TEST_CASE("U_p linearity and sifting")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[static_cast<std::size_t>(trial % 4)];
        const auto f = oracle::random_series(rng, -4, 4, 40);
        const auto g = oracle::random_series(rng, -4, 4, 40);
        CHECK(u_p(f + g, p) == u_p(f, p) + u_p(g, p));
        CHECK(u_p(scalar_mul(-3, f), p) == scalar_mul(-3, u_p(f, p)));

        const auto lhs = u_p(f * dilate(g, p), p);
        const auto rhs = u_p(f, p) * g;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduce_mod commutes with the ring operations")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t m = 2 + trial % 12;
        const auto f = oracle::random_series(rng, -2, 2, 15, 50);
        const auto g = oracle::random_series(rng, -2, 2, 15, 50);
        CHECK(reduce_mod(f + g, m) == reduce_mod(f, m) + reduce_mod(g, m));
        CHECK(reduce_mod(f * g, m) == reduce_mod(f, m) * reduce_mod(g, m));
        CHECK(reduce_mod(pow_int(f, 3), m) == pow_int(reduce_mod(f, m), 3));
        CHECK(reduce_mod(u_p(f, 3), m) == u_p(reduce_mod(f, m), 3));
        CHECK(reduce_mod(dilate(f, 4), m) == dilate(reduce_mod(f, m), 4));
    }
}
