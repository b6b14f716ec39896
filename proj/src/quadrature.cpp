#include "nlbc/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "nlbc/errors.hpp"

namespace nlbc::quad {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1,1].
constexpr double kNodes[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};

constexpr double kWeights[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double g15(const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
  return half * sum;
}

double adapt(const Integrand& f, double a, double b, double whole,
             double tol, int depth, int max_depth) {
  const double mid = 0.5 * (a + b);
  const double left = g15(f, a, mid);
  const double right = g15(f, mid, b);
  const double err = std::abs(whole - (left + right));
  if (err <= tol) return left + right;
  if (depth >= max_depth)
    throw QuadratureFailure("adaptive quadrature did not reach tolerance at depth " +
                            std::to_string(max_depth));
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double gauss15(const Integrand& f, double a, double b) { return g15(f, a, b); }

double integrate(const Integrand& f, double a, double b, double abs_tol,
                 int max_depth) {
  if (!(b > a)) return 0.0;
  return adapt(f, a, b, g15(f, a, b), abs_tol, 0, max_depth);
}

double integrate_split(const Integrand& f, double a, double b,
                       std::vector<double> breakpoints, double abs_tol,
                       int max_depth) {
  if (!(b > a)) return 0.0;
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  std::vector<double> pts;
  for (double p : breakpoints) {
    if (p < a || p > b) continue;
    if (pts.empty() || p - pts.back() > 1e-15) pts.push_back(p);
  }
  double total = 0.0;
  const double tol_per = abs_tol / static_cast<double>(pts.size());
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    total += integrate(f, pts[k], pts[k + 1], tol_per, max_depth);
  return total;
}

}  // namespace nlbc::quad
