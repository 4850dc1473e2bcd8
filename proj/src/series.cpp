#include <etacong/series.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace etacong
{

namespace
{

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// Coefficient arithmetic for the two storage kinds. Both expose the same
// small vocabulary so the series kernels below are written once.
struct ExactRing {
    using value_type = Integer;

    value_type zero() const
    {
        return 0;
    }
    value_type one() const
    {
        return 1;
    }
    bool is_zero(const Integer &a) const
    {
        return sgn(a) == 0;
    }
    value_type from_integer(const Integer &c) const
    {
        return c;
    }
    Integer to_integer(const Integer &a) const
    {
        return a;
    }
    value_type add(const Integer &a, const Integer &b) const
    {
        return a + b;
    }
    value_type neg(const Integer &a) const
    {
        return -a;
    }
    value_type mul(const Integer &a, const Integer &b) const
    {
        return a * b;
    }
    void mul_add(Integer &acc, const Integer &a, const Integer &b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    std::optional<value_type> inverse(const Integer &a) const
    {
        if (a == 1 || a == -1) {
            return a;
        }
        return std::nullopt;
    }
};

struct ResidueRing {
    using value_type = Residue;
    Residue m;

    value_type zero() const
    {
        return 0;
    }
    value_type one() const
    {
        return 1;
    }
    bool is_zero(Residue a) const
    {
        return a == 0;
    }
    value_type from_integer(const Integer &c) const
    {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), m);
        return r.get_ui();
    }
    Integer to_integer(Residue a) const
    {
        Integer out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof(Residue), 0, 0, &a);
        return out;
    }
    value_type add(Residue a, Residue b) const
    {
        const auto s = a + b;
        return s >= m ? s - m : s;
    }
    value_type neg(Residue a) const
    {
        return a == 0 ? 0 : m - a;
    }
    value_type mul(Residue a, Residue b) const
    {
        return static_cast<Residue>(static_cast<u128>(a) * b % m);
    }
    void mul_add(Residue &acc, Residue a, Residue b) const
    {
        acc = add(acc, mul(a, b));
    }
    std::optional<value_type> inverse(Residue a) const
    {
        // Extended Euclid on (a, m).
        i128 r0 = m, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const auto q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        if (r0 != 1) {
            return std::nullopt;
        }
        if (t0 < 0) {
            t0 += m;
        }
        return static_cast<Residue>(t0);
    }
};

template <typename Storage>
auto make_ring(const CoefficientDomain &domain)
{
    if constexpr (std::is_same_v<Storage, TruncatedSeries::ExactStorage>) {
        return ExactRing{};
    } else {
        return ResidueRing{domain.modulus()};
    }
}

void require_same_domain(const TruncatedSeries &f, const TruncatedSeries &g, const char *op)
{
    if (!(f.domain() == g.domain())) {
        std::ostringstream oss;
        oss << op << ": coefficient domain mismatch (" << f.domain() << " vs " << g.domain() << ")";
        throw std::invalid_argument(oss.str());
    }
}

template <typename Ring, typename Storage>
std::size_t count_nonzero(const Ring &ring, const Storage &v)
{
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [&](const auto &a) { return !ring.is_zero(a); }));
}

// First out_len coefficients of the Cauchy product of a and b. The outer
// loop runs over the sparser operand, which makes products with dilated
// eta factors cheap.
template <typename Ring, typename Storage>
Storage convolve(const Ring &ring, const Storage &a, const Storage &b, std::size_t out_len)
{
    Storage out(out_len, ring.zero());
    const bool swap = count_nonzero(ring, a) > count_nonzero(ring, b);
    const Storage &x = swap ? b : a;
    const Storage &y = swap ? a : b;
    const std::size_t outer = std::min(x.size(), out_len);
    for (std::size_t i = 0; i < outer; ++i) {
        if (ring.is_zero(x[i])) {
            continue;
        }
        const std::size_t inner = std::min(y.size(), out_len - i);
        for (std::size_t j = 0; j < inner; ++j) {
            ring.mul_add(out[i + j], x[i], y[j]);
        }
    }
    return out;
}

} // namespace

struct SeriesAccess {
    static TruncatedSeries make(CoefficientDomain domain, Exponent lead,
                                std::variant<TruncatedSeries::ExactStorage, TruncatedSeries::ResidueStorage> coeffs)
    {
        return TruncatedSeries(domain, lead, std::move(coeffs));
    }

    // Calls fn(ring, storage) with the ring matching f's domain.
    template <typename Fn>
    static decltype(auto) visit(const TruncatedSeries &f, Fn &&fn)
    {
        return std::visit(
            [&](const auto &storage) -> decltype(auto) {
                using Storage = std::decay_t<decltype(storage)>;
                return fn(make_ring<Storage>(f.domain_), storage);
            },
            f.coeffs_);
    }

    // Calls fn(ring, storage_f, storage_g); domains must already agree.
    template <typename Fn>
    static decltype(auto) visit2(const TruncatedSeries &f, const TruncatedSeries &g, Fn &&fn)
    {
        return std::visit(
            [&](const auto &sf) -> decltype(auto) {
                using Storage = std::decay_t<decltype(sf)>;
                return fn(make_ring<Storage>(f.domain_), sf, std::get<Storage>(g.coeffs_));
            },
            f.coeffs_);
    }

    template <typename Storage>
    static TruncatedSeries build(const CoefficientDomain &domain, Exponent lead, Storage coeffs)
    {
        return make(domain, lead, std::move(coeffs));
    }
};

CoefficientDomain CoefficientDomain::modular(std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
    }
    CoefficientDomain d;
    d.modulus_ = static_cast<Residue>(modulus);
    return d;
}

std::ostream &operator<<(std::ostream &os, const CoefficientDomain &d)
{
    if (d.is_exact()) {
        return os << "ZZ";
    }
    return os << "ZZ/" << d.modulus();
}

TruncatedSeries::TruncatedSeries(CoefficientDomain domain, Exponent lead,
                                 std::variant<ExactStorage, ResidueStorage> coeffs)
    : domain_(domain), lead_(lead), coeffs_(std::move(coeffs))
{
    const auto n = std::visit([](const auto &v) { return v.size(); }, coeffs_);
    if (n == 0) {
        throw std::invalid_argument("a truncated series needs at least one stored coefficient");
    }
    trunc_ = lead_ + static_cast<Exponent>(n) - 1;
    normalize();
}

void TruncatedSeries::normalize()
{
    if (valuation()) {
        return;
    }
    const Exponent new_lead = std::min<Exponent>(0, trunc_);
    if (new_lead == lead_) {
        return;
    }
    lead_ = new_lead;
    const auto len = static_cast<std::size_t>(trunc_ - lead_ + 1);
    std::visit([&](auto &v) { v.assign(len, typename std::decay_t<decltype(v)>::value_type(0)); }, coeffs_);
}

TruncatedSeries TruncatedSeries::from_coeffs(Exponent lead, const std::vector<Integer> &coeffs,
                                             CoefficientDomain domain)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("from_coeffs: coefficient sequence must be nonempty");
    }
    if (domain.is_exact()) {
        return TruncatedSeries(domain, lead, coeffs);
    }
    const ResidueRing ring{domain.modulus()};
    ResidueStorage res;
    res.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        res.push_back(ring.from_integer(c));
    }
    return TruncatedSeries(domain, lead, std::move(res));
}

TruncatedSeries TruncatedSeries::zero(Exponent trunc, CoefficientDomain domain)
{
    const Exponent lead = std::min<Exponent>(0, trunc);
    return from_coeffs(lead, std::vector<Integer>(static_cast<std::size_t>(trunc - lead + 1)), domain);
}

TruncatedSeries TruncatedSeries::one(Exponent trunc, CoefficientDomain domain)
{
    return monomial(1, 0, trunc, domain);
}

TruncatedSeries TruncatedSeries::monomial(const Integer &c, Exponent e, Exponent trunc, CoefficientDomain domain)
{
    if (trunc < e) {
        throw std::invalid_argument("monomial: truncation order below the exponent");
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(trunc - e + 1));
    coeffs[0] = c;
    return from_coeffs(e, coeffs, domain);
}

Integer TruncatedSeries::coeff(Exponent n) const
{
    if (n > trunc_) {
        throw std::out_of_range("coefficient of q^" + std::to_string(n) + " requested beyond truncation order "
                                + std::to_string(trunc_));
    }
    if (n < lead_) {
        return 0;
    }
    return SeriesAccess::visit(*this, [&](const auto &ring, const auto &v) {
        return ring.to_integer(v[static_cast<std::size_t>(n - lead_)]);
    });
}

std::optional<Exponent> TruncatedSeries::valuation() const
{
    return SeriesAccess::visit(*this, [&](const auto &ring, const auto &v) -> std::optional<Exponent> {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!ring.is_zero(v[i])) {
                return lead_ + static_cast<Exponent>(i);
            }
        }
        return std::nullopt;
    });
}

TruncatedSeries TruncatedSeries::truncated(Exponent new_trunc) const
{
    if (new_trunc > trunc_) {
        throw std::out_of_range("cannot raise truncation order from " + std::to_string(trunc_) + " to "
                                + std::to_string(new_trunc));
    }
    if (new_trunc < lead_) {
        return zero(new_trunc, domain_);
    }
    return std::visit(
        [&](const auto &v) {
            using Storage = std::decay_t<decltype(v)>;
            Storage out(v.begin(), v.begin() + (new_trunc - lead_ + 1));
            return SeriesAccess::build(domain_, lead_, std::move(out));
        },
        coeffs_);
}

const TruncatedSeries::ExactStorage &TruncatedSeries::exact_coeffs() const
{
    if (!domain_.is_exact()) {
        throw std::logic_error("exact_coeffs: series is over a residue ring");
    }
    return std::get<ExactStorage>(coeffs_);
}

const TruncatedSeries::ResidueStorage &TruncatedSeries::residues() const
{
    if (domain_.is_exact()) {
        throw std::logic_error("residues: series is over the integers");
    }
    return std::get<ResidueStorage>(coeffs_);
}

bool equal_up_to(const TruncatedSeries &f, const TruncatedSeries &g, Exponent upto)
{
    require_same_domain(f, g, "equal_up_to");
    if (upto > f.trunc() || upto > g.trunc()) {
        throw std::out_of_range("equal_up_to: comparison to q^" + std::to_string(upto)
                                + " exceeds a truncation order");
    }
    return SeriesAccess::visit2(f, g, [&](const auto &ring, const auto &vf, const auto &vg) {
        const Exponent from = std::min(f.lead(), g.lead());
        for (Exponent n = from; n <= upto; ++n) {
            const bool in_f = n >= f.lead();
            const bool in_g = n >= g.lead();
            const auto *a = in_f ? &vf[static_cast<std::size_t>(n - f.lead())] : nullptr;
            const auto *b = in_g ? &vg[static_cast<std::size_t>(n - g.lead())] : nullptr;
            if (a != nullptr && b != nullptr) {
                if (!(*a == *b)) {
                    return false;
                }
            } else if (a != nullptr) {
                if (!ring.is_zero(*a)) {
                    return false;
                }
            } else if (b != nullptr) {
                if (!ring.is_zero(*b)) {
                    return false;
                }
            }
        }
        return true;
    });
}

bool operator==(const TruncatedSeries &f, const TruncatedSeries &g)
{
    if (!(f.domain() == g.domain())) {
        return false;
    }
    return equal_up_to(f, g, std::min(f.trunc(), g.trunc()));
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f)
{
    bool first = true;
    for (Exponent n = f.lead(); n <= f.trunc(); ++n) {
        const Integer c = f.coeff(n);
        if (sgn(c) == 0) {
            continue;
        }
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        const Integer mag = abs(c);
        if (n == 0) {
            os << mag;
        } else {
            if (mag != 1) {
                os << mag << "*";
            }
            os << "q";
            if (n != 1) {
                os << "^" << n;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    os << " + O(q^" << f.trunc() + 1 << ")";
    if (!f.domain().is_exact()) {
        os << " over " << f.domain();
    }
    return os;
}

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_domain(f, g, "add");
    const Exponent lead = std::min(f.lead(), g.lead());
    const Exponent trunc = std::min(f.trunc(), g.trunc());
    return SeriesAccess::visit2(f, g, [&](const auto &ring, const auto &vf, const auto &vg) {
        using Storage = std::decay_t<decltype(vf)>;
        Storage out(static_cast<std::size_t>(trunc - lead + 1), ring.zero());
        for (Exponent n = f.lead(); n <= trunc; ++n) {
            out[static_cast<std::size_t>(n - lead)] = vf[static_cast<std::size_t>(n - f.lead())];
        }
        for (Exponent n = g.lead(); n <= trunc; ++n) {
            auto &slot = out[static_cast<std::size_t>(n - lead)];
            slot = ring.add(slot, vg[static_cast<std::size_t>(n - g.lead())]);
        }
        return SeriesAccess::build(f.domain(), lead, std::move(out));
    });
}

TruncatedSeries negate(const TruncatedSeries &f)
{
    return SeriesAccess::visit(f, [&](const auto &ring, const auto &v) {
        using Storage = std::decay_t<decltype(v)>;
        Storage out;
        out.reserve(v.size());
        for (const auto &a : v) {
            out.push_back(ring.neg(a));
        }
        return SeriesAccess::build(f.domain(), f.lead(), std::move(out));
    });
}

TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_domain(f, g, "sub");
    return add(f, negate(g));
}

TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_domain(f, g, "mul");
    const Exponent lead = f.lead() + g.lead();
    const Exponent trunc = std::min(f.trunc() + g.lead(), g.trunc() + f.lead());
    return SeriesAccess::visit2(f, g, [&](const auto &ring, const auto &vf, const auto &vg) {
        auto out = convolve(ring, vf, vg, static_cast<std::size_t>(trunc - lead + 1));
        return SeriesAccess::build(f.domain(), lead, std::move(out));
    });
}

TruncatedSeries scalar_mul(const Integer &c, const TruncatedSeries &f)
{
    return SeriesAccess::visit(f, [&](const auto &ring, const auto &v) {
        using Storage = std::decay_t<decltype(v)>;
        const auto cc = ring.from_integer(c);
        Storage out;
        out.reserve(v.size());
        for (const auto &a : v) {
            out.push_back(ring.mul(cc, a));
        }
        return SeriesAccess::build(f.domain(), f.lead(), std::move(out));
    });
}

TruncatedSeries invert(const TruncatedSeries &f)
{
    const auto val = f.valuation();
    if (!val) {
        throw std::domain_error("invert: series vanishes up to its truncation order");
    }
    const Exponent m = *val;
    return SeriesAccess::visit(f, [&](const auto &ring, const auto &v) {
        using Storage = std::decay_t<decltype(v)>;
        const auto offset = static_cast<std::size_t>(m - f.lead());
        const auto a0_inv = ring.inverse(v[offset]);
        if (!a0_inv) {
            std::ostringstream oss;
            oss << "invert: lowest nonzero coefficient " << ring.to_integer(v[offset]) << " is not a unit in "
                << f.domain();
            throw std::domain_error(oss.str());
        }
        const std::size_t len = v.size() - offset;
        // Nonzero tail of the unit part; eta factors are sparse, so this
        // gives the Euler-style recurrence for free.
        std::vector<std::size_t> support;
        for (std::size_t i = 1; i < len; ++i) {
            if (!ring.is_zero(v[offset + i])) {
                support.push_back(i);
            }
        }
        const auto minus_inv = ring.neg(*a0_inv);
        Storage out(len, ring.zero());
        out[0] = *a0_inv;
        for (std::size_t n = 1; n < len; ++n) {
            auto acc = ring.zero();
            for (const auto i : support) {
                if (i > n) {
                    break;
                }
                ring.mul_add(acc, v[offset + i], out[n - i]);
            }
            out[n] = ring.mul(minus_inv, acc);
        }
        return SeriesAccess::build(f.domain(), -m, std::move(out));
    });
}

TruncatedSeries pow_int(const TruncatedSeries &f, std::int64_t e)
{
    if (e == 0) {
        return TruncatedSeries::one(f.trunc() - f.lead(), f.domain());
    }
    if (e < 0) {
        if (e == std::numeric_limits<std::int64_t>::min()) {
            throw std::invalid_argument("pow_int: exponent out of range");
        }
        return pow_int(invert(f), -e);
    }
    std::optional<TruncatedSeries> result;
    TruncatedSeries base = f;
    while (true) {
        if ((e & 1) != 0) {
            result = result ? mul(*result, base) : base;
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *result;
}

TruncatedSeries shift(const TruncatedSeries &f, Exponent k)
{
    return SeriesAccess::visit(f, [&](const auto &, const auto &v) {
        auto copy = v;
        return SeriesAccess::build(f.domain(), f.lead() + k, std::move(copy));
    });
}

TruncatedSeries dilate(const TruncatedSeries &f, std::int64_t m, std::optional<Exponent> cap)
{
    if (m < 1) {
        throw std::invalid_argument("dilate: factor must be positive, got " + std::to_string(m));
    }
    const Exponent lead = m * f.lead();
    Exponent trunc = m * (f.trunc() + 1) - 1;
    if (cap) {
        trunc = std::min(trunc, *cap);
    }
    if (trunc < lead) {
        return TruncatedSeries::zero(trunc, f.domain());
    }
    return SeriesAccess::visit(f, [&](const auto &ring, const auto &v) {
        using Storage = std::decay_t<decltype(v)>;
        Storage out(static_cast<std::size_t>(trunc - lead + 1), ring.zero());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto pos = static_cast<std::size_t>(m) * i;
            if (pos >= out.size()) {
                break;
            }
            out[pos] = v[i];
        }
        return SeriesAccess::build(f.domain(), lead, std::move(out));
    });
}

TruncatedSeries u_p(const TruncatedSeries &f, std::int64_t p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("u_p: " + std::to_string(p) + " is not prime");
    }
    const Exponent lead = ceil_div(f.lead(), p);
    const Exponent trunc = floor_div(f.trunc(), p);
    if (trunc < lead) {
        return TruncatedSeries::zero(trunc, f.domain());
    }
    return SeriesAccess::visit(f, [&](const auto &, const auto &v) {
        using Storage = std::decay_t<decltype(v)>;
        Storage out;
        out.reserve(static_cast<std::size_t>(trunc - lead + 1));
        for (Exponent n = lead; n <= trunc; ++n) {
            out.push_back(v[static_cast<std::size_t>(p * n - f.lead())]);
        }
        return SeriesAccess::build(f.domain(), lead, std::move(out));
    });
}

TruncatedSeries reduce_mod(const TruncatedSeries &f, std::int64_t modulus)
{
    const auto domain = CoefficientDomain::modular(modulus);
    if (!f.domain().is_exact()) {
        throw std::invalid_argument("reduce_mod: series is already over a residue ring");
    }
    const ResidueRing ring{domain.modulus()};
    TruncatedSeries::ResidueStorage out;
    out.reserve(f.size());
    for (const auto &c : f.exact_coeffs()) {
        out.push_back(ring.from_integer(c));
    }
    return SeriesAccess::build(domain, f.lead(), std::move(out));
}

std::optional<Exponent> ord_m(const TruncatedSeries &f, std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("ord_m: modulus must be at least 2");
    }
    const auto m = static_cast<Residue>(modulus);
    if (!f.domain().is_exact() && f.domain().modulus() % m != 0) {
        throw std::invalid_argument("ord_m: modulus does not divide the series' residue modulus");
    }
    for (Exponent n = f.lead(); n <= f.trunc(); ++n) {
        const Integer c = f.coeff(n);
        if (mpz_divisible_ui_p(c.get_mpz_t(), m) == 0) {
            return n;
        }
    }
    return std::nullopt;
}

TruncatedSeries pentagonal_series(Exponent trunc)
{
    if (trunc < 0) {
        throw std::invalid_argument("pentagonal_series: truncation order must be nonnegative");
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(trunc + 1));
    coeffs[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const Exponent a = j * (3 * j - 1) / 2;
        const Exponent b = j * (3 * j + 1) / 2;
        if (a > trunc) {
            break;
        }
        const int sign = (j % 2 == 0) ? 1 : -1;
        coeffs[static_cast<std::size_t>(a)] = sign;
        if (b <= trunc) {
            coeffs[static_cast<std::size_t>(b)] = sign;
        }
    }
    return TruncatedSeries::from_coeffs(0, coeffs);
}

TruncatedSeries eta_euler_factor(std::int64_t delta, std::int64_t r, Exponent trunc)
{
    if (delta < 1) {
        throw std::invalid_argument("eta_euler_factor: delta must be positive");
    }
    if (trunc < 0) {
        throw std::invalid_argument("eta_euler_factor: truncation order must be nonnegative");
    }
    if (r == 0) {
        return TruncatedSeries::one(trunc);
    }
    const Exponent base_trunc = trunc / delta;
    const auto euler = pentagonal_series(base_trunc);
    TruncatedSeries base = r == 1 ? euler : r == -1 ? invert(euler) : pow_int(euler, r);
    return dilate(base, delta, trunc);
}

} // namespace etacong
