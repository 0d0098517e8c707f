#include "burgers/geometry.hpp"

namespace burgers {

namespace {

void push_crossings(std::vector<double>& cuts, const Bump& bump, double f0, double df) {
  // Parameter values s where f0 + s·df hits a knot of the bump.
  if (df == 0.0) return;
  for (double k : bump.knots()) {
    const double s = (k - f0) / df;
    if (s > 0.0 && s < 1.0) cuts.push_back(s);
  }
}

}  // namespace

EdgeIntegrals integrate_edge(const TensorBump2& phi, Point2 a, Point2 b) {
  const double dt = b.t - a.t;
  const double dx = b.x - a.x;
  std::vector<double> cuts;
  push_crossings(cuts, phi.bt, a.t, dt);
  push_crossings(cuts, phi.bx, a.x, dx);
  const double line = integrate_1d(
      [&](double s) { return phi.value(a.t + s * dt, a.x + s * dx); }, 0.0, 1.0,
      std::move(cuts));
  return EdgeIntegrals{line * dt, line * dx};
}

GreenIntegrals polygon_green(const TensorBump2& phi, const std::vector<Point2>& poly) {
  GreenIntegrals g;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeIntegrals e = integrate_edge(phi, poly[i], poly[(i + 1) % n]);
    g.d_t += e.dx;  // ∫∫∂_t = ∮ phi dx
    g.d_x -= e.dt;  // ∫∫∂_x = -∮ phi dt
  }
  return g;
}

double integrate_line_t(const TensorBump2& phi, double t0, double t1, double x_ref,
                        double slope, double t_ref) {
  std::vector<double> cuts;
  for (double k : phi.bt.knots()) cuts.push_back(k);
  if (slope != 0.0)
    for (double k : phi.bx.knots()) cuts.push_back(t_ref + (k - x_ref) / slope);
  return integrate_1d(
      [&](double t) { return phi.value(t, x_ref + slope * (t - t_ref)); }, t0, t1,
      std::move(cuts));
}

}  // namespace burgers
