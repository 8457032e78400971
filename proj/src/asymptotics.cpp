#include "cubic/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cubic/special.hpp"

namespace cubic {

double c_normalizer(i64 p) {
    const double q = 1.0 / static_cast<double>(p);
    return 1 + q + q * q;
}

double k_normalizer(i64 p) {
    const double lp = static_cast<double>(p);
    return (1 - std::pow(lp, -5.0 / 3)) * (1 + 1 / lp) / (1 - std::pow(lp, -1.0 / 3));
}

LocalConstants local_constants(i64 p, SplittingSymbol s) {
    if (p < 2) throw std::invalid_argument("local_constants: p must be prime");
    const double lp = static_cast<double>(p);
    const double x = std::pow(lp, -1.0 / 3);  // p^(-1/3)
    double c = 0, k = 0;
    switch (s) {
        case SplittingSymbol::Split:
            c = 1.0 / 6;
            k = std::pow(1 + x, 3) / 6;
            break;
        case SplittingSymbol::PartiallySplit:
            c = 1.0 / 2;
            k = (1 + x) * (1 + x * x) / 2;
            break;
        case SplittingSymbol::Inert:
            c = 1.0 / 3;
            k = (1 + 1 / lp) / 3;
            break;
        case SplittingSymbol::PartiallyRamified:
            c = 1 / lp;
            k = (1 + x) * (1 + x) / lp;
            break;
        case SplittingSymbol::TotallyRamified:
            c = 1 / (lp * lp);
            k = (1 + x) / (lp * lp);
            break;
    }
    return {c / c_normalizer(p), k / k_normalizer(p)};
}

LocalConstants infinity_constants(Sign s) {
    const double r3 = std::numbers::sqrt3;
    if (s == Sign::Negative) return {0.75, 3 / (3 + r3)};
    return {0.25, r3 / (3 + r3)};
}

LocalConstants global_constants(const RefinedClass& alpha) {
    LocalConstants out{1, 1};
    if (alpha.infinity) {
        const auto inf = infinity_constants(*alpha.infinity);
        out.c *= inf.c;
        out.k *= inf.k;
    }
    for (const auto& [p, s] : alpha.local) {
        const auto lc = local_constants(p, s);
        out.c *= lc.c;
        out.k *= lc.k;
    }
    return out;
}

double secondary_coefficient(bool divide_by_zeta2) {
    const double pi = std::numbers::pi;
    const double g = gamma_third();
    double b = 3 * (3 + std::numbers::sqrt3) * zeta(1.0 / 3) * g * g * g / (10 * pi * pi * pi * zeta(5.0 / 3));
    if (divide_by_zeta2) b /= zeta(2.0);
    return b;
}

AsymptoticModel AsymptoticModel::for_class(const RefinedClass& alpha, bool divide_by_zeta2) {
    const auto gc = global_constants(alpha);
    return {gc.c, gc.k, secondary_coefficient(divide_by_zeta2)};
}

double AsymptoticModel::main_term(double x) const {
    static const double zeta3 = zeta(3.0);
    return c_ * x / (3 * zeta3);
}

double AsymptoticModel::secondary_term(double x) const { return k_ * b_ * std::pow(x, 5.0 / 6); }

double xi_partial(std::span<const FieldRecord> records, double s, i64 cutoff, i64 census_xmax) {
    if (cutoff > census_xmax) throw std::invalid_argument("xi_partial: cutoff exceeds census range");
    double sum = 0;
    for (const auto& r : records) {
        const i64 n = abs64(r.disc);
        if (n > cutoff) continue;
        sum += 1.0 / ((r.cyclic ? 3.0 : 1.0) * std::pow(static_cast<double>(n), s));
    }
    return sum;
}

FitResult fit_u(std::span<const double> g, std::span<const double> f, std::span<const double> x,
                const AsymptoticModel& model) {
    if (x.empty()) throw std::invalid_argument("fit_u: empty grid");
    if (g.size() != x.size() || f.size() != x.size()) throw std::invalid_argument("fit_u: misaligned series");
    // weighted least squares in one unknown, weights 1/x
    double num = 0, den = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        num += (model.Hstar(x[j]) - g[j]) * f[j] / x[j];
        den += f[j] * f[j] / x[j];
    }
    FitResult out;
    out.u = den > 0 ? num / den : 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double r = (g[j] + out.u * f[j] - model.Hstar(x[j])) / std::sqrt(x[j]);
        out.residual += r * r;
    }
    return out;
}

}  // namespace cubic
