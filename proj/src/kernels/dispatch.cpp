#include <cstdlib>
#include <cstring>

#include "cubic/kernels/disc_scan.hpp"

namespace cubic::kernels {

Isa detect_isa() {
    if (const char* force = std::getenv("CUBIC_FORCE_SCALAR"); force && std::strcmp(force, "0") != 0) {
        return Isa::Scalar;
    }
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

ScanFn scan_window_for(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::Avx2) return &scan_window_avx2;
#endif
    (void)isa;
    return &scan_window_scalar;
}

ScanFn scan_window() {
    static const ScanFn fn = scan_window_for(detect_isa());
    return fn;
}

}  // namespace cubic::kernels
