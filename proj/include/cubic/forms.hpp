#pragma once

// Exact integer algebra of binary cubic forms ax^3 + bx^2y + cxy^2 + dy^3.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

#include "cubic/arith.hpp"

namespace cubic {

struct BinaryCubicForm {
    i64 a = 0, b = 0, c = 0, d = 0;

    friend auto operator<=>(const BinaryCubicForm&, const BinaryCubicForm&) = default;

    BinaryCubicForm operator-() const { return {-a, -b, -c, -d}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    /// F(x, y), exact. Throws ArithmeticOverflow past 128 bits.
    i128 operator()(i128 x, i128 y) const;
};

std::ostream& operator<<(std::ostream& os, const BinaryCubicForm& f);

/// Px^2 + Qxy + Ry^2.
struct QuadraticForm {
    i64 P = 0, Q = 0, R = 0;

    friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;

    i128 discriminant() const { return i128{Q} * Q - i128{4} * P * R; }
    /// |Q| <= P <= R.
    bool is_reduced() const { return (Q < 0 ? -Q : Q) <= P && P <= R; }
};

/// (x, y) -> (m11 x + m12 y, m21 x + m22 y). Construction does not check the
/// determinant; operations that require GL2(Z) do.
struct UnimodularMatrix {
    i64 m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    friend auto operator<=>(const UnimodularMatrix&, const UnimodularMatrix&) = default;

    i128 det() const { return i128{m11} * m22 - i128{m12} * m21; }
    bool is_unimodular() const {
        const i128 d = det();
        return d == 1 || d == -1;
    }
    /// Throws std::invalid_argument unless unimodular.
    UnimodularMatrix inverse() const;

    static constexpr UnimodularMatrix identity() { return {1, 0, 0, 1}; }
};

/// Matrix product; transform(transform(F, A), B) == transform(F, A * B).
UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);

/// The five splitting shapes of a prime in a cubic field.
enum class SplittingSymbol : std::uint8_t {
    Split = 0,              // 111
    PartiallySplit = 1,     // 21
    Inert = 2,              // 3
    PartiallyRamified = 3,  // 1^2 1
    TotallyRamified = 4,    // 1^3
};

inline constexpr std::array<SplittingSymbol, 5> kAllSymbols = {
    SplittingSymbol::Split, SplittingSymbol::PartiallySplit, SplittingSymbol::Inert,
    SplittingSymbol::PartiallyRamified, SplittingSymbol::TotallyRamified};

/// File token: 111, 21, 3, 121, 13.
std::string_view to_token(SplittingSymbol s);
/// Display label: 111, 21, 3, 1^21, 1^3.
std::string_view to_label(SplittingSymbol s);
std::optional<SplittingSymbol> parse_symbol(std::string_view token);
inline bool is_ramified(SplittingSymbol s) {
    return s == SplittingSymbol::PartiallyRamified || s == SplittingSymbol::TotallyRamified;
}

/// 18abcd + b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 in 128-bit arithmetic.
i128 discriminant(const BinaryCubicForm& f);

/// (b^2 - 3ac, bc - 9ad, c^2 - 3bd); throws ArithmeticOverflow if a
/// coefficient leaves 64 bits.
QuadraticForm hessian(const BinaryCubicForm& f);

/// F o M. Throws std::invalid_argument for a non-unimodular M and
/// ArithmeticOverflow if a coefficient leaves 64 bits.
BinaryCubicForm transform(const BinaryCubicForm& f, const UnimodularMatrix& m);

i64 content(const BinaryCubicForm& f);
inline bool is_primitive(const BinaryCubicForm& f) { return content(f) == 1; }

/// No linear factor over Q. Requires f != 0.
bool is_irreducible(const BinaryCubicForm& f);

/// Whether the cubic ring of f is maximal at the prime p. Requires f
/// primitive; throws std::invalid_argument otherwise.
bool is_maximal_at(const BinaryCubicForm& f, i64 p);

/// Maximal at every prime whose square divides disc(f). `finder` bounds the
/// factorization; beyond it std::domain_error is thrown.
bool is_maximal(const BinaryCubicForm& f, const SquareDivisorFinder& finder);
bool is_maximal(const BinaryCubicForm& f);

/// Splitting shape of p read off the factorization of f mod p. Meaningful
/// only when f is maximal at p.
SplittingSymbol splitting_type(const BinaryCubicForm& f, i64 p);

/// Dedekind's criterion for Z[t]/(t^3 + bt^2 + ct + d) at p.
bool dedekind_is_maximal(i64 b, i64 c, i64 d, i64 p);

/// Square discriminant; for a maximal irreducible form this is Galois.
bool is_cyclic(const BinaryCubicForm& f);

}  // namespace cubic
