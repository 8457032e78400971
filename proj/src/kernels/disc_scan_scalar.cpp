#include "cubic/kernels/disc_scan.hpp"

namespace cubic::kernels {

std::size_t scan_window_scalar(const QuadraticWindow& w, std::int64_t* out) {
    std::int64_t v = w.value, dv = w.delta;
    std::size_t n = 0;
    for (std::int64_t k = 0; k < w.count; ++k) {
        if (v >= w.lo && v <= w.hi) out[n++] = k;
        v += dv;
        dv += w.second;
    }
    return n;
}

}  // namespace cubic::kernels
