#ifndef NLBC_QUADRATURE_HPP
#define NLBC_QUADRATURE_HPP

#include <functional>
#include <initializer_list>
#include <vector>

namespace nlbc::quad {

using Integrand = std::function<double(double)>;

/*
 * Adaptive Gauss-Legendre quadrature.
 *
 * A 15-point rule is applied to the whole interval and to its two halves;
 * the interval is bisected until |whole - (left+right)| falls below the
 * local error budget. Throws QuadratureFailure past max_depth.
 */
double integrate(const Integrand& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 40);

/* Same, but the integration range is pre-split at the given breakpoints
 * (kernel support endpoints, domain corners, |.| kinks). Breakpoints outside
 * (a,b) are ignored. */
double integrate_split(const Integrand& f, double a, double b,
                       std::vector<double> breakpoints,
                       double abs_tol = 1e-12, int max_depth = 40);

/* Non-adaptive 15-point Gauss-Legendre on [a,b]; exact through degree 29.
 * Used for per-panel product integrals where the integrand is smooth. */
double gauss15(const Integrand& f, double a, double b);

}  // namespace nlbc::quad

#endif  // NLBC_QUADRATURE_HPP
