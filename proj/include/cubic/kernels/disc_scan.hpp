#pragma once

// Window scan over a quadratic integer sequence.
//
// For fixed (a, b, c) the discriminant of (a, b, c, d) is a quadratic in d
// with constant second difference -54a^2, so the census inner loop reduces
// to: walk consecutive values of a quadratic by finite differences and
// report the offsets whose value lies in a window [lo, hi]. The scalar
// kernel is the reference; the AVX2 kernel must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cubic::kernels {

struct QuadraticWindow {
    std::int64_t value = 0;   // q(0)
    std::int64_t delta = 0;   // q(1) - q(0)
    std::int64_t second = 0;  // q(k+2) - 2q(k+1) + q(k), constant
    std::int64_t count = 0;   // offsets 0 .. count-1 are scanned
    std::int64_t lo = 0;      // inclusive
    std::int64_t hi = 0;      // inclusive
};

// Callers guarantee |q(k)| and the running differences stay below 2^62 on
// the scanned range. `out` must hold `count` entries; returns the number of
// offsets written, in increasing order.
using ScanFn = std::size_t (*)(const QuadraticWindow&, std::int64_t* out);

std::size_t scan_window_scalar(const QuadraticWindow& w, std::int64_t* out);
#if defined(__x86_64__) || defined(_M_X64)
std::size_t scan_window_avx2(const QuadraticWindow& w, std::int64_t* out);
#endif

enum class Isa { Scalar, Avx2 };

/// Best ISA the running CPU supports. CUBIC_FORCE_SCALAR=1 in the
/// environment pins the scalar path.
Isa detect_isa();
std::string_view isa_name(Isa isa);
ScanFn scan_window_for(Isa isa);

/// Kernel selected once at first use.
ScanFn scan_window();

}  // namespace cubic::kernels
