#pragma once

#include <algorithm>
#include <vector>

#include "burgers/bump.hpp"

namespace burgers {

struct Point2 {
  double t = 0.0;
  double x = 0.0;
};

/// ∫ phi dt and ∫ phi dx along one straight edge.
struct EdgeIntegrals {
  double dt = 0.0;
  double dx = 0.0;
};

/// ∫∫ ∂_t phi and ∫∫ ∂_x phi over a polygon (CCW in the (t,x) plane),
/// evaluated as boundary integrals by Green's theorem.
struct GreenIntegrals {
  double d_t = 0.0;
  double d_x = 0.0;
};

namespace detail {

// Gauss-Legendre 5 on [-1,1]: exact through degree 9.
inline constexpr double kGl5Node[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
inline constexpr double kGl5Weight[5] = {0.23692688505618909, 0.47862867049936647,
                                         0.56888888888888889, 0.47862867049936647,
                                         0.23692688505618909};

}  // namespace detail

/// ∫_a^b f, with [a,b] subdivided at the supplied knots so each piece is a
/// single polynomial; Gauss order 5 per piece (exact through degree 9).
template <class F>
double integrate_1d(F&& f, double a, double b, std::vector<double> knots) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_1d(f, b, a, std::move(knots));
  knots.erase(std::remove_if(knots.begin(), knots.end(),
                             [&](double k) { return !(k > a && k < b); }),
              knots.end());
  knots.push_back(a);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  double acc = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double lo = knots[i - 1];
    const double hi = knots[i];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int k = 0; k < 5; ++k)
      acc += half * detail::kGl5Weight[k] * f(mid + half * detail::kGl5Node[k]);
  }
  return acc;
}

/// Exact edge integrals of a tensor bump along the segment a→b.
EdgeIntegrals integrate_edge(const TensorBump2& phi, Point2 a, Point2 b);

/// Green integrals of a tensor bump over a CCW polygon.
GreenIntegrals polygon_green(const TensorBump2& phi, const std::vector<Point2>& poly);

/// ∫_{t0}^{t1} phi(t, x_ref + slope·(t - t_ref)) dt, exact.
double integrate_line_t(const TensorBump2& phi, double t0, double t1, double x_ref,
                        double slope, double t_ref);

}  // namespace burgers
