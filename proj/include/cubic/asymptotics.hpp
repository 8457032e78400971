#pragma once

// Two-term density model for cubic field counts:
//   H(x)  = C x / (3 zeta(3))
//   H*(x) = H(x) + K B x^(5/6)
// with C, K products of local densities over the support of a refined class
// and B the shared secondary coefficient.

#include <span>
#include <vector>

#include "cubic/census.hpp"
#include "cubic/refined_class.hpp"

namespace cubic {

struct LocalConstants {
    double c = 0;
    double k = 0;
};

/// Normalizers 1 + 1/p + 1/p^2 and (1 - p^(-5/3))(1 + 1/p) / (1 - p^(-1/3)).
double c_normalizer(i64 p);
double k_normalizer(i64 p);

/// Density of splitting shape s at p, main (c) and secondary (k).
LocalConstants local_constants(i64 p, SplittingSymbol s);

/// Densities at infinity: C = 3/4, 1/4 and K = 3/(3+sqrt3), sqrt3/(3+sqrt3)
/// for negative and positive discriminants.
LocalConstants infinity_constants(Sign s);

/// Product of the local constants over the support of alpha.
LocalConstants global_constants(const RefinedClass& alpha);

/// B = 3(3+sqrt3) zeta(1/3) Gamma(1/3)^3 / (10 pi^3 zeta(5/3)). With
/// `divide_by_zeta2` the value is further divided by zeta(2); that variant is
/// kept only as a diagnostic and does not reproduce the published tables.
double secondary_coefficient(bool divide_by_zeta2 = false);

class AsymptoticModel {
public:
    AsymptoticModel(double c, double k, double b) : c_(c), k_(k), b_(b) {}
    static AsymptoticModel for_class(const RefinedClass& alpha, bool divide_by_zeta2 = false);

    double c() const { return c_; }
    double k() const { return k_; }
    double b() const { return b_; }

    double main_term(double x) const;
    double secondary_term(double x) const;
    double H(double x) const { return main_term(x); }
    double Hstar(double x) const { return main_term(x) + secondary_term(x); }

private:
    double c_, k_, b_;
};

/// Sum over fields with |disc| <= cutoff of 1 / (|Aut| |disc|^s), with
/// |Aut| = 3 for cyclic fields. `census_xmax` is the range the records
/// cover; a cutoff beyond it throws std::invalid_argument.
double xi_partial(std::span<const FieldRecord> records, double s, i64 cutoff, i64 census_xmax);

struct FitResult {
    double u = 0;
    /// Sum of squared sqrt(x)-normalized residuals at the optimum.
    double residual = 0;
};

/// u minimizing sum_j ((g_j + u f_j - H*_+(x_j)) / sqrt(x_j))^2.
FitResult fit_u(std::span<const double> g, std::span<const double> f, std::span<const double> x,
                const AsymptoticModel& model);

}  // namespace cubic
