#include "cubic/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubic {

namespace {

void check_domain(double s) {
    if (!(s > 0) || s == 1.0 || !std::isfinite(s)) throw std::domain_error("zeta: need real s > 0, s != 1");
}

}  // namespace

double zeta_eta_series(double s) {
    check_domain(s);
    // error below 3 / (3 + sqrt 8)^n relative to eta
    constexpr int n = 40;
    std::array<long double, n + 1> d{};
    long double term = 1.0L / n;  // (n + i - 1)! 4^i / ((n - i)! (2i)!) at i = 0
    long double acc = 0;
    for (int i = 0; i <= n; ++i) {
        acc += term;
        d[i] = n * acc;
        term *= static_cast<long double>(n + i) * (n - i) * 4 / ((2 * i + 1) * (2 * i + 2));
    }
    long double eta = 0;
    for (int k = 0; k < n; ++k) {
        const long double sign = (k % 2 == 0) ? 1 : -1;
        eta += sign * (d[k] - d[n]) / std::pow(static_cast<long double>(k + 1), static_cast<long double>(s));
    }
    eta = -eta / d[n];
    return static_cast<double>(eta / (1 - std::pow(2.0L, 1.0L - s)));
}

double zeta_euler_maclaurin(double s) {
    check_domain(s);
    // B_2j / (2j)! for j = 1..10
    constexpr std::array<long double, 10> kBernoulli = {
        1.0L / 12,
        -1.0L / 720,
        1.0L / 30240,
        -1.0L / 1209600,
        1.0L / 47900160,
        -691.0L / 1307674368000,
        1.0L / 74724249600,
        -3617.0L / 10670622842880000,
        43867.0L / 5109094217170944000,
        -174611.0L / 802857662698291200000.0L,
    };
    constexpr int n = 40;
    const long double ls = s;
    long double sum = 0;
    for (int k = 1; k < n; ++k) sum += std::pow(static_cast<long double>(k), -ls);
    const long double big_n = n;
    sum += std::pow(big_n, 1 - ls) / (ls - 1) + std::pow(big_n, -ls) / 2;
    // s (s+1) ... (s+2j-2) N^(-s-2j+1)
    long double rising = ls;
    long double power = std::pow(big_n, -ls - 1);
    for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
        sum += kBernoulli[j] * rising * power;
        rising *= (ls + 2 * j + 1) * (ls + 2 * j + 2);
        power /= big_n * big_n;
    }
    return static_cast<double>(sum);
}

double zeta(double s) { return zeta_eta_series(s); }

double gamma_lanczos(double x) {
    if (!(x >= 0.5)) throw std::domain_error("gamma_lanczos: need x >= 1/2");
    constexpr std::array<double, 9> kCoef = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7;
    const long double z = x - 1.0L;
    long double series = kCoef[0];
    for (int i = 1; i < 9; ++i) series += kCoef[i] / (z + i);
    const long double t = z + g + 0.5L;
    return static_cast<double>(std::sqrt(2 * std::numbers::pi_v<long double>) * std::pow(t, z + 0.5L) *
                               std::exp(-t) * series);
}

double gamma_third() { return 3.0 * gamma_lanczos(4.0 / 3.0); }

}  // namespace cubic
