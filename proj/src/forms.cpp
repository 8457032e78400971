#include "cubic/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cubic {

i128 BinaryCubicForm::operator()(i128 x, i128 y) const {
    i128 t = checked_add(checked_mul(a, x), checked_mul(b, y));
    t = checked_add(checked_mul(t, x), checked_mul(checked_mul(c, y), y));
    return checked_add(checked_mul(t, x), checked_mul(checked_mul(checked_mul(d, y), y), y));
}

std::ostream& operator<<(std::ostream& os, const BinaryCubicForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ',' << f.d << ')';
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    const i128 d = det();
    if (d == 1) return {m22, -m12, -m21, m11};
    if (d == -1) return {-m22, m12, m21, -m11};
    throw std::invalid_argument("matrix is not unimodular");
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    auto dot = [](i64 p, i64 q, i64 r, i64 s) {
        return narrow_i64(checked_add(checked_mul(p, q), checked_mul(r, s)));
    };
    return {dot(x.m11, y.m11, x.m12, y.m21), dot(x.m11, y.m12, x.m12, y.m22),
            dot(x.m21, y.m11, x.m22, y.m21), dot(x.m21, y.m12, x.m22, y.m22)};
}

std::string_view to_token(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::Split: return "111";
        case SplittingSymbol::PartiallySplit: return "21";
        case SplittingSymbol::Inert: return "3";
        case SplittingSymbol::PartiallyRamified: return "121";
        case SplittingSymbol::TotallyRamified: return "13";
    }
    return "?";
}

std::string_view to_label(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::PartiallyRamified: return "1^21";
        case SplittingSymbol::TotallyRamified: return "1^3";
        default: return to_token(s);
    }
}

std::optional<SplittingSymbol> parse_symbol(std::string_view token) {
    for (auto s : kAllSymbols) {
        if (token == to_token(s) || token == to_label(s)) return s;
    }
    return std::nullopt;
}

i128 discriminant(const BinaryCubicForm& f) {
    const i128 a = f.a, b = f.b, c = f.c, d = f.d;
    const i128 t1 = checked_mul(checked_mul(checked_mul(18, a), b), checked_mul(c, d));
    const i128 t2 = checked_mul(checked_mul(b, b), checked_mul(c, c));
    const i128 t3 = checked_mul(checked_mul(4, a), checked_mul(checked_mul(c, c), c));
    const i128 t4 = checked_mul(checked_mul(4, d), checked_mul(checked_mul(b, b), b));
    const i128 t5 = checked_mul(checked_mul(27, checked_mul(a, a)), checked_mul(d, d));
    return checked_add(checked_add(checked_add(t1, t2), -t3), -checked_add(t4, t5));
}

QuadraticForm hessian(const BinaryCubicForm& f) {
    const i128 a = f.a, b = f.b, c = f.c, d = f.d;
    return {narrow_i64(checked_add(checked_mul(b, b), -checked_mul(3 * a, c))),
            narrow_i64(checked_add(checked_mul(b, c), -checked_mul(9 * a, d))),
            narrow_i64(checked_add(checked_mul(c, c), -checked_mul(3 * b, d)))};
}

BinaryCubicForm transform(const BinaryCubicForm& f, const UnimodularMatrix& m) {
    if (!m.is_unimodular()) throw std::invalid_argument("transform: matrix is not unimodular");
    const i128 p = m.m11, q = m.m21, r = m.m12, s = m.m22;
    const i128 a = f.a, b = f.b, c = f.c, d = f.d;
    auto mul = [](std::initializer_list<i128> xs) {
        i128 acc = 1;
        for (i128 x : xs) acc = checked_mul(acc, x);
        return acc;
    };
    auto sum = [](std::initializer_list<i128> xs) {
        i128 acc = 0;
        for (i128 x : xs) acc = checked_add(acc, x);
        return acc;
    };
    const i128 na = f(p, q);
    const i128 nd = f(r, s);
    const i128 nb = sum({mul({3, a, p, p, r}), mul({b, p, p, s}), mul({2, b, p, q, r}),
                         mul({2, c, p, q, s}), mul({c, q, q, r}), mul({3, d, q, q, s})});
    const i128 nc = sum({mul({3, a, p, r, r}), mul({2, b, p, r, s}), mul({b, q, r, r}),
                         mul({c, p, s, s}), mul({2, c, q, r, s}), mul({3, d, q, s, s})});
    return {narrow_i64(na), narrow_i64(nb), narrow_i64(nc), narrow_i64(nd)};
}

i64 content(const BinaryCubicForm& f) {
    return std::gcd(std::gcd(f.a, f.b), std::gcd(f.c, f.d));
}

namespace {

std::vector<u64> divisors(u64 n) {
    std::vector<std::pair<u64, int>> factors;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<u64> out{1};
    for (auto [p, e] : factors) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

u64 mulmod(u64 x, u64 y, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(x) * y % m);
}

u64 to_residue(i128 v, u64 m) {
    auto r = static_cast<i128>(v % static_cast<i128>(m));
    if (r < 0) r += static_cast<i128>(m);
    return static_cast<u64>(r);
}

// F(x, y) == 0, tolerating intermediates beyond 128 bits. |F(x, y)| < 2^256
// for 64-bit inputs, so vanishing modulo five primes above 2^61 (product
// above 2^310) forces an exact zero.
bool vanishes_at(const BinaryCubicForm& f, i64 x, i64 y) {
    try {
        return f(x, y) == 0;
    } catch (const ArithmeticOverflow&) {
    }
    constexpr std::array<u64, 5> kPrimes = {
        (u64{1} << 61) - 1, (u64{1} << 62) - 57, (u64{1} << 63) - 25,
        ~u64{0} - 58, ~u64{0} - 82};
    for (u64 m : kPrimes) {
        const u64 xm = to_residue(x, m), ym = to_residue(y, m);
        const u64 a = to_residue(f.a, m), b = to_residue(f.b, m);
        const u64 c = to_residue(f.c, m), d = to_residue(f.d, m);
        u64 t = (mulmod(a, xm, m) + mulmod(b, ym, m)) % m;
        t = (mulmod(t, xm, m) + mulmod(mulmod(c, ym, m), ym, m)) % m;
        t = (mulmod(t, xm, m) + mulmod(mulmod(mulmod(d, ym, m), ym, m), ym, m)) % m;
        if (t != 0) return false;
    }
    return true;
}

}  // namespace

bool is_irreducible(const BinaryCubicForm& f) {
    if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero form");
    if (f.a == 0 || f.d == 0) return false;
    const auto qs = divisors(static_cast<u64>(abs64(f.a)));
    const auto ps = divisors(static_cast<u64>(abs64(f.d)));
    for (u64 q : qs) {
        for (u64 p : ps) {
            if (std::gcd(p, q) != 1) continue;
            const auto pp = static_cast<i64>(p), qq = static_cast<i64>(q);
            if (vanishes_at(f, pp, qq) || vanishes_at(f, -pp, qq)) return false;
        }
    }
    return true;
}

namespace {

// Residues of (a, b, c, d) modulo p.
std::array<i64, 4> reduce_mod(const BinaryCubicForm& f, i64 p) {
    return {mod_floor(f.a, p), mod_floor(f.b, p), mod_floor(f.c, p), mod_floor(f.d, p)};
}

// Evaluates a polynomial given high-to-low coefficients modulo p.
i64 horner_mod(const i64* coef, int n, i64 t, i64 p) {
    i128 acc = 0;
    for (int i = 0; i < n; ++i) acc = (acc * t + coef[i]) % p;
    return static_cast<i64>(acc);
}

// Multiplicities of the roots of f mod p on P^1(F_p), in discovery order.
struct RootPattern {
    std::array<int, 3> mult{};
    int count = 0;
    int total() const { return std::accumulate(mult.begin(), mult.begin() + count, 0); }
};

RootPattern root_pattern(const BinaryCubicForm& f, i64 p) {
    auto r = reduce_mod(f, p);
    RootPattern out;
    int lead = 0;
    while (lead < 4 && r[lead] == 0) ++lead;
    if (lead == 4) throw std::invalid_argument("form vanishes identically mod p");
    if (lead > 0) out.mult[out.count++] = lead;

    // affine part t -> F(t, 1), degree 3 - lead, high-to-low coefficients
    std::array<i64, 4> poly{};
    int n = 4 - lead;
    std::copy(r.begin() + lead, r.end(), poly.begin());
    for (i64 t = 0; t < p && n > 1; ++t) {
        int m = 0;
        while (n > 1 && horner_mod(poly.data(), n, t, p) == 0) {
            // synthetic division by (x - t)
            std::array<i64, 4> q{};
            i128 carry = 0;
            for (int i = 0; i < n - 1; ++i) {
                carry = (carry * t + poly[i]) % p;
                q[i] = static_cast<i64>(carry);
            }
            poly = q;
            --n;
            ++m;
        }
        if (m > 0) out.mult[out.count++] = m;
    }
    return out;
}

}  // namespace

bool is_maximal_at(const BinaryCubicForm& f, i64 p) {
    if (!is_primitive(f)) throw std::invalid_argument("is_maximal_at: form is not primitive");
    const i128 disc = discriminant(f);
    if (disc == 0 || valuation(disc, p) <= 1) return true;

    const auto r = reduce_mod(f, p);
    const i64 p2 = p * p;
    // multiple root at (1:0) iff p | a and p | b
    if (r[0] == 0 && r[1] == 0) return mod_floor(i128{f.a}, p2) != 0;
    for (i64 t = 0; t < p; ++t) {
        if (horner_mod(r.data(), 4, t, p) != 0) continue;
        const std::array<i64, 3> deriv = {mod_floor(i128{3} * r[0], p), mod_floor(i128{2} * r[1], p),
                                          r[2]};
        if (horner_mod(deriv.data(), 3, t, p) != 0) continue;
        return mod_floor(f(t, 1), p2) != 0;
    }
    throw std::logic_error("is_maximal_at: no multiple root although p^2 | disc");
}

bool is_maximal(const BinaryCubicForm& f, const SquareDivisorFinder& finder) {
    const i128 disc = discriminant(f);
    if (disc == 0) throw std::invalid_argument("is_maximal: zero discriminant");
    std::vector<i64> ps;
    finder.find(disc, ps);
    return std::all_of(ps.begin(), ps.end(), [&](i64 p) { return is_maximal_at(f, p); });
}

bool is_maximal(const BinaryCubicForm& f) {
    static const SquareDivisorFinder finder;
    return is_maximal(f, finder);
}

SplittingSymbol splitting_type(const BinaryCubicForm& f, i64 p) {
    const RootPattern rp = root_pattern(f, p);
    int maxm = 0;
    for (int i = 0; i < rp.count; ++i) maxm = std::max(maxm, rp.mult[i]);
    if (maxm == 3) return SplittingSymbol::TotallyRamified;
    if (maxm == 2) return SplittingSymbol::PartiallyRamified;
    switch (rp.count) {
        case 3: return SplittingSymbol::Split;
        case 1: return SplittingSymbol::PartiallySplit;
        default: return SplittingSymbol::Inert;
    }
}

namespace {

// Dense polynomials over Z or F_p, low-to-high coefficients.
using Poly = std::vector<i128>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& x, const Poly& y) {
    if (x.empty() || y.empty()) return {};
    Poly out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
    return out;
}

Poly reduce(Poly f, i64 p) {
    for (auto& c : f) c = mod_floor(c, p);
    trim(f);
    return f;
}

i128 inverse_mod(i128 v, i64 p) {
    // Fermat; p is prime
    i128 result = 1, base = mod_floor(v, p);
    for (i64 e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

// Remainder of x modulo y over F_p; y nonzero and trimmed.
Poly rem_mod(Poly x, const Poly& y, i64 p) {
    const i128 lead_inv = inverse_mod(y.back(), p);
    while (x.size() >= y.size()) {
        const i128 factor = x.back() * lead_inv % p;
        const std::size_t shift = x.size() - y.size();
        for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] = mod_floor(x[shift + i] - factor * y[i], p);
        trim(x);
    }
    return x;
}

Poly gcd_mod(Poly x, Poly y, i64 p) {
    while (!y.empty()) {
        Poly r = rem_mod(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace

bool dedekind_is_maximal(i64 b, i64 c, i64 d, i64 p) {
    const Poly f = {d, c, b, 1};
    Poly rest = reduce(f, p);
    Poly g = {1}, h = {1};
    for (i64 t = 0; t < p && rest.size() > 1; ++t) {
        int e = 0;
        while (rest.size() > 1) {
            // divide by (x - t) if t is a root
            i128 acc = 0;
            Poly q(rest.size() - 1, 0);
            for (std::size_t i = rest.size(); i-- > 0;) {
                acc = (acc * t + rest[i]) % p;
                if (i > 0) q[i - 1] = acc;
            }
            if (acc != 0) break;
            rest = std::move(q);
            ++e;
        }
        if (e == 0) continue;
        const Poly lin = {mod_floor(i128{-t}, p), 1};
        g = mul(g, lin);
        for (int k = 1; k < e; ++k) h = mul(h, lin);
    }
    // what remains is 1 or a single irreducible factor of degree >= 2
    g = mul(g, rest);

    Poly gh = mul(g, h);
    gh.resize(std::max(gh.size(), f.size()), 0);
    Poly t(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) {
        const i128 diff = gh[i] - (i < f.size() ? f[i] : 0);
        if (diff % p != 0) throw std::logic_error("dedekind: lifts do not reproduce f mod p");
        t[i] = diff / p;
    }
    Poly common = gcd_mod(reduce(t, p), reduce(g, p), p);
    common = gcd_mod(common, reduce(h, p), p);
    return common.size() == 1;
}

bool is_cyclic(const BinaryCubicForm& f) { return is_perfect_square(discriminant(f)); }

}  // namespace cubic
