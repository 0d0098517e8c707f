#include "burgers/grid_measure.hpp"

#include <algorithm>
#include <cmath>

namespace burgers {

namespace {

void check_spec(const GridSpec2& s) {
  if (!(s.t1 > s.t0) || !(s.x1 > s.x0) || s.nt == 0 || s.nx == 0)
    throw DomainError("grid window must be nonempty");
}

/// Splits one front's alive window into time segments that each stay inside
/// a single (t,x) bin, then hands (bin index, dt) to the sink.
template <class F>
void walk_front(const FrontSolution& sol, const Front& f, const GridSpec2& spec, F&& sink) {
  const double a = std::max({f.t_birth, 0.0, spec.t0});
  const double b = std::min({f.t_death, sol.horizon(), spec.t1});
  if (!(a < b)) return;
  const double dt = (spec.t1 - spec.t0) / static_cast<double>(spec.nt);
  const double dx = (spec.x1 - spec.x0) / static_cast<double>(spec.nx);
  const std::size_t r0 = std::min(
      spec.nt - 1, static_cast<std::size_t>(std::max(0.0, (a - spec.t0) / dt)));
  for (std::size_t r = r0; r < spec.nt; ++r) {
    const double ra = std::max(a, spec.t0 + dt * static_cast<double>(r));
    const double rb = std::min(b, spec.t0 + dt * static_cast<double>(r + 1));
    if (!(ra < rb)) {
      if (spec.t0 + dt * static_cast<double>(r) >= b) break;
      continue;
    }
    std::vector<double> cuts{ra, rb};
    if (f.sigma != 0.0) {
      for (std::size_t c = 0; c <= spec.nx; ++c) {
        const double xc = spec.x0 + dx * static_cast<double>(c);
        const double tc = f.t_birth + (xc - f.x_birth) / f.sigma;
        if (tc > ra && tc < rb) cuts.push_back(tc);
      }
      std::sort(cuts.begin(), cuts.end());
    }
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const double s0 = cuts[i - 1];
      const double s1 = cuts[i];
      if (!(s1 > s0)) continue;
      const double xm = f.position(0.5 * (s0 + s1));
      if (xm < spec.x0 || xm >= spec.x1) continue;
      const std::size_t c = std::min(
          spec.nx - 1, static_cast<std::size_t>((xm - spec.x0) / dx));
      sink(r * spec.nx + c, s1 - s0);
    }
  }
}

}  // namespace

double GridMeasure::total_variation() const {
  double acc = 0.0;
  for (double m : signed_mass) acc += std::fabs(m);
  return acc;
}

GridMeasure bin_measure(const FrontSolution& sol, const GridSpec2& spec) {
  check_spec(spec);
  GridMeasure gm;
  gm.spec = spec;
  gm.signed_mass.assign(spec.nt * spec.nx, 0.0);
  gm.front_abs_mass.assign(spec.nt * spec.nx, 0.0);
  gm.projected_abs.assign(spec.nt * spec.nx, 0.0);
  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const FrontMeasure m = mu_on_front(sol, i);
    const double rate = m.integral();
    const double abs_rate = m.abs_integral();
    walk_front(sol, sol.fronts()[i], spec, [&](std::size_t bin, double seg) {
      gm.signed_mass[bin] += rate * seg;
      gm.front_abs_mass[bin] += std::fabs(rate) * seg;
      gm.projected_abs[bin] += abs_rate * seg;
    });
  }
  return gm;
}

GridMeasure3 bin_measure3(const FrontSolution& sol, const GridSpec3& spec) {
  check_spec(spec.tx);
  if (!(spec.v1 > spec.v0) || spec.nv == 0) throw DomainError("grid window must be nonempty");
  GridMeasure3 gm;
  gm.spec = spec;
  gm.signed_mass.assign(spec.tx.nt * spec.tx.nx * spec.nv, 0.0);
  const double dv = (spec.v1 - spec.v0) / static_cast<double>(spec.nv);
  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const FrontMeasure m = mu_on_front(sol, i);
    // Per v-bin slice of the density, precomputed once per front.
    std::vector<double> slice(spec.nv, 0.0);
    for (std::size_t w = 0; w < spec.nv; ++w) {
      const double va = spec.v0 + dv * static_cast<double>(w);
      const double vb = va + dv;
      if (vb <= m.u_lo || va >= m.u_hi) continue;
      slice[w] = m.integral_to(vb) - m.integral_to(va);
    }
    walk_front(sol, sol.fronts()[i], spec.tx, [&](std::size_t bin, double seg) {
      for (std::size_t w = 0; w < spec.nv; ++w)
        if (slice[w] != 0.0) gm.signed_mass[bin * spec.nv + w] += slice[w] * seg;
    });
  }
  return gm;
}

}  // namespace burgers
