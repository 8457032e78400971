// Reduction theory for binary cubic forms.
//
// A form with disc > 0 is reduced when its Hessian is; a form with disc < 0
// is reduced when the quadratic (x - phi y)(x - conj(phi) y) over its complex
// root pair is. With a > 0, the unique real root theta, s = -b/a and
// phi = u + iv:
//   2u <= 1     <=>  theta >= s - 1  <=>  F(-b - a, a) <= 0
//   2u >= -1    <=>  theta <= s + 1  <=>  F(a - b, a) >= 0
//   |phi|^2 >= 1                     <=>  a^2 - ac + bd - d^2 <= 0
// The last line uses that |phi|^2 is the only real root of the cubic whose
// roots are the pairwise products of roots of F. All three predicates are
// exact integer tests.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubic/census.hpp"

namespace cubic {

namespace {

BinaryCubicForm positive_leading(const BinaryCubicForm& f) { return f.a < 0 ? -f : f; }

bool complex_pair_reduced(const BinaryCubicForm& g) {
    // g.a > 0
    const i128 a = g.a, b = g.b, c = g.c, d = g.d;
    if (g(-b - a, a) > 0) return false;
    if (g(a - b, a) < 0) return false;
    return checked_add(checked_add(checked_mul(a, a), -checked_mul(a, c)),
                       checked_add(checked_mul(b, d), -checked_mul(d, d))) <= 0;
}

// Real root of a t^3 + b t^2 + c t + d (a > 0, exactly one real root).
long double real_root(const BinaryCubicForm& g) {
    const long double a = g.a, b = g.b, c = g.c, d = g.d;
    auto f = [&](long double t) { return ((a * t + b) * t + c) * t + d; };
    long double bound = 1 + std::max({std::fabs(b), std::fabs(c), std::fabs(d)}) / a;
    long double lo = -bound, hi = bound;
    for (int i = 0; i < 400 && lo < hi; ++i) {
        const long double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < 0) lo = mid; else hi = mid;
    }
    return lo + (hi - lo) / 2;
}

constexpr UnimodularMatrix kSwap{0, -1, 1, 0};  // (x, y) -> (-y, x)

UnimodularMatrix translation(i64 k) { return {1, k, 0, 1}; }

BinaryCubicForm reduce_positive(BinaryCubicForm g) {
    for (;;) {
        const QuadraticForm h = hessian(g);
        if (h.P <= 0) throw std::logic_error("Hessian is not positive definite");
        if ((h.Q < 0 ? -h.Q : h.Q) > h.P) {
            g = transform(g, translation(floor_div(h.P - h.Q, 2 * h.P)));
        } else if (h.R < h.P) {
            g = transform(g, kSwap);
        } else {
            return g;
        }
    }
}

BinaryCubicForm reduce_negative(BinaryCubicForm g) {
    g = positive_leading(g);
    for (;;) {
        const long double theta = real_root(g);
        const long double u = (-static_cast<long double>(g.b) / g.a - theta) / 2;
        if (const long double k = std::nearbyint(u); std::fabs(k) >= 1) {
            g = positive_leading(transform(g, translation(static_cast<i64>(k))));
        }
        // exact corrections of the translation
        for (;;) {
            const i128 a = g.a, b = g.b;
            if (g(-b - a, a) > 0) {
                g = transform(g, translation(1));
            } else if (g(a - b, a) < 0) {
                g = transform(g, translation(-1));
            } else {
                break;
            }
        }
        if (complex_pair_reduced(g)) return g;
        g = positive_leading(transform(g, kSwap));
    }
}

}  // namespace

bool has_reduced_covariant(const BinaryCubicForm& f) {
    const i128 disc = discriminant(f);
    if (disc == 0) throw std::invalid_argument("has_reduced_covariant: zero discriminant");
    if (disc > 0) return hessian(f).is_reduced();
    if (f.a == 0) throw std::invalid_argument("has_reduced_covariant: a = 0 with negative discriminant");
    return complex_pair_reduced(positive_leading(f));
}

const std::vector<UnimodularMatrix>& small_unimodular_matrices() {
    static const std::vector<UnimodularMatrix> set = [] {
        std::vector<UnimodularMatrix> out;
        for (i64 p = -1; p <= 1; ++p)
            for (i64 q = -1; q <= 1; ++q)
                for (i64 r = -1; r <= 1; ++r)
                    for (i64 s = -1; s <= 1; ++s) {
                        UnimodularMatrix m{p, q, r, s};
                        if (m.is_unimodular()) out.push_back(m);
                    }
        return out;
    }();
    return set;
}

BinaryCubicForm canonicalize(const BinaryCubicForm& f) {
    if (!is_primitive(f)) throw std::invalid_argument("canonicalize: form is not primitive");
    if (!is_irreducible(f)) throw std::invalid_argument("canonicalize: form is reducible");
    const BinaryCubicForm reduced = discriminant(f) > 0 ? reduce_positive(f) : reduce_negative(f);
    BinaryCubicForm best = positive_leading(reduced);
    for (const auto& m : small_unimodular_matrices()) {
        const BinaryCubicForm g = positive_leading(transform(reduced, m));
        if (g < best && has_reduced_covariant(g)) best = g;
    }
    return best;
}

bool is_canonical_reduced(const BinaryCubicForm& f) {
    for (const auto& m : small_unimodular_matrices()) {
        const BinaryCubicForm g = positive_leading(transform(f, m));
        if (g < f && has_reduced_covariant(g)) return false;
    }
    return true;
}

}  // namespace cubic
