// Compiled with -mavx2; only reached after a runtime CPU check.
#include "cubic/kernels/disc_scan.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace cubic::kernels {

std::size_t scan_window_avx2(const QuadraticWindow& w, std::int64_t* out) {
    const std::int64_t s = w.second;
    // lane i holds q(k + i); stepping by four uses
    //   q(x + 4) - q(x) = 4 dq(x) + 6s  and that step grows by 16s.
    alignas(32) std::int64_t v0[4], d0[4];
    std::int64_t v = w.value, dv = w.delta;
    for (int i = 0; i < 4; ++i) {
        v0[i] = v;
        d0[i] = 4 * dv + 6 * s;
        v += dv;
        dv += s;
    }
    __m256i vals = _mm256_load_si256(reinterpret_cast<const __m256i*>(v0));
    __m256i steps = _mm256_load_si256(reinterpret_cast<const __m256i*>(d0));
    const __m256i step_growth = _mm256_set1_epi64x(16 * s);
    const __m256i below = _mm256_set1_epi64x(w.lo - 1);
    const __m256i above = _mm256_set1_epi64x(w.hi);

    std::size_t n = 0;
    std::int64_t k = 0;
    for (; k + 4 <= w.count; k += 4) {
        // in window iff v > lo - 1 and not v > hi
        const __m256i gt_lo = _mm256_cmpgt_epi64(vals, below);
        const __m256i gt_hi = _mm256_cmpgt_epi64(vals, above);
        const __m256i hit = _mm256_andnot_si256(gt_hi, gt_lo);
        unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(hit)));
        while (mask != 0) {
            out[n++] = k + __builtin_ctz(mask);
            mask &= mask - 1;
        }
        vals = _mm256_add_epi64(vals, steps);
        steps = _mm256_add_epi64(steps, step_growth);
    }
    if (k < w.count) {
        alignas(32) std::int64_t tail[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tail), vals);
        // lane 0 is q(k); finish with the scalar recurrence from there
        std::int64_t tv = tail[0];
        std::int64_t tdv = w.delta + k * s;
        for (; k < w.count; ++k) {
            if (tv >= w.lo && tv <= w.hi) out[n++] = k;
            tv += tdv;
            tdv += s;
        }
    }
    return n;
}

}  // namespace cubic::kernels

#endif
