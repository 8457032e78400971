#pragma once

// Slow, independent reference computations used as test oracles.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "cubic/forms.hpp"

namespace oracle {

using cubic::BinaryCubicForm;
using cubic::i128;
using cubic::i64;

inline i64 mod(i128 v, i64 p) {
    const i64 r = static_cast<i64>(v % p);
    return r < 0 ? r + p : r;
}

// trial division, fine for |n| up to ~10^12
inline std::map<i64, int> factor(i64 n) {
    std::map<i64, int> out;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

// distinct roots of F mod p on the projective line, by brute force
inline int distinct_roots(const BinaryCubicForm& f, i64 p) {
    int n = mod(f.a, p) == 0 ? 1 : 0;  // (1:0)
    for (i64 t = 0; t < p; ++t) n += mod(f(t, 1), p) == 0 ? 1 : 0;
    return n;
}

// splitting shape from root count and ramification
inline cubic::SplittingSymbol splitting(const BinaryCubicForm& f, i64 p) {
    using S = cubic::SplittingSymbol;
    const bool ramified = mod(cubic::discriminant(f), p) == 0;
    const int r = distinct_roots(f, p);
    if (ramified) return r == 2 ? S::PartiallyRamified : S::TotallyRamified;
    if (r == 3) return S::Split;
    if (r == 1) return S::PartiallySplit;
    return S::Inert;
}

// literal substitution F(m11 x + m12 y, m21 x + m22 y) by polynomial expansion
inline BinaryCubicForm substitute(const BinaryCubicForm& f, const cubic::UnimodularMatrix& m) {
    // coefficients of (px + qy)^i (rx + sy)^(3-i) collected by x-degree
    const i128 co[4] = {f.d, f.c, f.b, f.a};  // co[i]: coefficient of x^i y^(3-i)
    i128 out[4] = {0, 0, 0, 0};
    for (int i = 0; i <= 3; ++i) {
        // poly in x of (m11 x + m12)^i (m21 x + m22)^(3-i), y set to 1
        std::vector<i128> poly{1};
        auto mul = [&](i128 u, i128 v) {
            std::vector<i128> next(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * v;
                next[k + 1] += poly[k] * u;
            }
            poly = next;
        };
        for (int k = 0; k < i; ++k) mul(m.m11, m.m12);
        for (int k = i; k < 3; ++k) mul(m.m21, m.m22);
        for (int k = 0; k <= 3; ++k) out[k] += co[i] * poly[static_cast<std::size_t>(k)];
    }
    return {static_cast<i64>(out[3]), static_cast<i64>(out[2]), static_cast<i64>(out[1]), static_cast<i64>(out[0])};
}

inline cubic::UnimodularMatrix random_unimodular(std::mt19937_64& rng, int steps) {
    static const cubic::UnimodularMatrix gens[] = {
        {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}};
    cubic::UnimodularMatrix m = cubic::UnimodularMatrix::identity();
    std::uniform_int_distribution<int> pick(0, 5);
    for (int k = 0; k < steps; ++k) m = m * gens[pick(rng)];
    return m;
}

inline BinaryCubicForm random_form(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<i64> coef(-bound, bound);
    return {coef(rng), coef(rng), coef(rng), coef(rng)};
}

}  // namespace oracle
