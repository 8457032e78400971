#pragma once

// Real-axis special functions used by the density constants.

namespace cubic {

/// Riemann zeta for real s > 0, s != 1, through the alternating eta series
/// with Borwein's acceleration. Throws std::domain_error outside the domain.
double zeta(double s);
double zeta_eta_series(double s);
/// Independent route: Euler-Maclaurin summation with a Bernoulli tail.
double zeta_euler_maclaurin(double s);

/// Gamma for x >= 1/2 by the Lanczos rational approximation (g = 7, n = 9).
double gamma_lanczos(double x);

/// Gamma(1/3), evaluated as 3 * Gamma(4/3).
double gamma_third();

}  // namespace cubic
