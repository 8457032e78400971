#pragma once

// Integer helpers shared by the form algebra and the census: checked
// 64/128-bit arithmetic, integer roots and a small prime table.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Raised when an intermediate leaves the representable range.
class ArithmeticOverflow : public std::overflow_error {
public:
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

inline i128 checked_mul(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("128-bit multiply overflow");
    return r;
}

inline i128 checked_add(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("128-bit add overflow");
    return r;
}

inline i64 narrow_i64(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

inline i64 abs64(i64 v) { return v < 0 ? -v : v; }

i64 gcd64(i64 x, i64 y);

/// floor(sqrt(n)) for n >= 0.
u64 isqrt(u64 n);
/// floor(cbrt(n)) for n >= 0.
u64 icbrt(u64 n);
bool is_perfect_square(i128 n);

/// Floor and ceiling of num/den for den > 0.
inline i64 floor_div(i64 num, i64 den) {
    i64 q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}
inline i64 ceil_div(i64 num, i64 den) {
    i64 q = num / den;
    if ((num % den != 0) && (num > 0)) ++q;
    return q;
}

/// Least non-negative residue.
inline i64 mod_floor(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}
inline i64 mod_floor(i128 v, i64 m) {
    auto r = static_cast<i64>(v % m);
    return r < 0 ? r + m : r;
}

/// p-adic valuation of n != 0.
int valuation(i128 n, i64 p);

/// Primes up to `limit` (inclusive), cached and grown on demand. Thread-safe.
std::span<const i64> primes_up_to(i64 limit);

/// Finds the distinct primes p with p^2 | n by trial division up to cbrt(|n|)
/// followed by a square test on the cofactor. Construct once per bound; the
/// object is immutable afterwards.
class SquareDivisorFinder {
public:
    explicit SquareDivisorFinder(i128 max_abs = i128{1'000'000'000'000'000});

    i128 max_abs() const { return max_abs_; }

    /// Appends the primes to `out` in increasing order. Throws
    /// std::domain_error if n == 0 or |n| exceeds the configured bound.
    void find(i128 n, std::vector<i64>& out) const;

private:
    i128 max_abs_;
    std::span<const i64> primes_;
};

std::vector<i64> square_divisor_primes(i128 n, i128 max_abs = i128{1'000'000'000'000'000});

}  // namespace cubic
