#include "burgers/kinetic.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/evolve.hpp"
#include "burgers/grid_measure.hpp"

namespace burgers {

namespace {

double qbar(double v) { return v * v * v / 3.0; }
double etabar(double v) { return 0.5 * v * v; }

/// Rate of the quadratic entropy on a front, [q̄] - sigma[η̄].
double quadratic_rate(const Front& f) {
  return (qbar(f.u_r) - qbar(f.u_l)) - f.sigma * (etabar(f.u_r) - etabar(f.u_l));
}

/// Visits every region of constancy intersecting [t_lo, t_hi] as a CCW
/// trapezoid; tail cells are closed off just outside [x_lo, x_hi], where the
/// test function already vanishes.
template <class F>
void for_each_cell(const FrontSolution& sol, double t_lo, double t_hi, double x_lo,
                   double x_hi, F&& emit) {
  const auto& starts = sol.band_starts();
  for (std::size_t k = 0; k < sol.band_count(); ++k) {
    const double b0 = std::max(starts[k], t_lo);
    const double b1 = std::min(k + 1 < sol.band_count() ? starts[k + 1] : sol.horizon(), t_hi);
    if (!(b0 < b1)) continue;
    const auto& order = sol.band_fronts(k);
    std::vector<double> p0(order.size()), p1(order.size());
    double lo = x_lo, hi = x_hi;
    for (std::size_t i = 0; i < order.size(); ++i) {
      p0[i] = sol.fronts()[order[i]].position(b0);
      p1[i] = sol.fronts()[order[i]].position(b1);
      lo = std::min(lo, std::min(p0[i], p1[i]));
      hi = std::max(hi, std::max(p0[i], p1[i]));
    }
    lo -= 1.0;
    hi += 1.0;
    for (std::size_t i = 0; i <= order.size(); ++i) {
      const double value =
          i == 0 ? (order.empty() ? sol.initial_values().front() : sol.fronts()[order[0]].u_l)
                 : sol.fronts()[order[i - 1]].u_r;
      const double xl0 = i == 0 ? lo : p0[i - 1];
      const double xl1 = i == 0 ? lo : p1[i - 1];
      const double xr0 = i == order.size() ? hi : p0[i];
      const double xr1 = i == order.size() ? hi : p1[i];
      emit(value, std::vector<Point2>{{b0, xl0}, {b1, xl1}, {b1, xr1}, {b0, xr0}});
    }
  }
}

void require_time_support_inside(const TensorBump2& phi, double horizon) {
  if (!(phi.bt.lo() > 0.0 && phi.bt.hi() < horizon))
    throw DomainError("test function must vanish near t=0 and the horizon");
}

/// ∫ phi(t, x_f(t)) dt over the front's alive window.
double along_front(const FrontSolution& sol, const Front& f, const TensorBump2& phi) {
  const double t0 = std::max(f.t_birth, 0.0);
  const double t1 = std::min(f.t_death, sol.horizon());
  if (!(t0 < t1)) return 0.0;
  return integrate_line_t(phi, t0, t1, f.x_birth, f.sigma, f.t_birth);
}

}  // namespace

std::vector<DissipationRow> entropy_dissipation(const FrontSolution& sol,
                                                const EntropyDescriptor& eta) {
  const auto& fronts = sol.fronts();
  std::vector<DissipationRow> rows(fronts.size());
  parallel_for(fronts.size(), [&](std::size_t i) {
    const Front& f = fronts[i];
    const FrontMeasure m = mu_on_front(sol, i);
    DissipationRow& r = rows[i];
    r.front_id = i;
    r.t0 = m.t0;
    r.t1 = m.t1;
    r.entropy_id = eta.id();
    r.rate_closed_form = (eta.q(f.u_r) - eta.q(f.u_l)) - f.sigma * (eta.eta(f.u_r) - eta.eta(f.u_l));
    r.rate_kernel =
        eta.integrate_against_curvature(m.u_lo, m.u_hi, [&](double v) { return m.density(v); });
    r.nu_rate = nu_rate(f);
    r.convex = eta.convex();
  });
  return rows;
}

double weak_residual(const FrontSolution& sol, const EntropyDescriptor& eta,
                     const TensorBump2& phi) {
  require_time_support_inside(phi, sol.horizon());
  double acc = 0.0;
  for_each_cell(sol, phi.bt.lo(), phi.bt.hi(), phi.bx.lo(), phi.bx.hi(),
                [&](double value, const std::vector<Point2>& poly) {
                  if (value == 0.0) return;  // eta(0) = q(0) = 0 by convention
                  const GreenIntegrals g = polygon_green(phi, poly);
                  acc += eta.eta(value) * g.d_t + eta.q(value) * g.d_x;
                });
  return -acc;
}

double burgers_weak_residual(const FrontSolution& sol, const TensorBump2& phi) {
  if (!(phi.bt.hi() < sol.horizon()))
    throw DomainError("test function must vanish before the horizon");
  double acc = 0.0;
  for_each_cell(sol, 0.0, phi.bt.hi(), phi.bx.lo(), phi.bx.hi(),
                [&](double value, const std::vector<Point2>& poly) {
                  if (value == 0.0) return;
                  const GreenIntegrals g = polygon_green(phi, poly);
                  acc += value * g.d_t + 0.5 * value * value * g.d_x;
                });
  const double at0 = phi.bt.value(0.0);
  if (at0 != 0.0) {
    const auto& bp = sol.initial_breaks();
    const auto& vv = sol.initial_values();
    double init = vv.front() * phi.bx.integral_to(bp.front());
    for (std::size_t i = 1; i < bp.size(); ++i)
      init += vv[i] * (phi.bx.integral_to(bp[i]) - phi.bx.integral_to(bp[i - 1]));
    init += vv.back() * (phi.bx.integral() - phi.bx.integral_to(bp.back()));
    acc += at0 * init;
  }
  return acc;
}

KineticPairing kinetic_pairing(const FrontSolution& sol, const TensorBump3& psi) {
  if (!(psi.bv.lo() > 0.0 && psi.bv.hi() < 1.0))
    throw DomainError("v-support must sit inside (0,1)");
  const TensorBump2 phi{psi.bt, psi.bx};
  require_time_support_inside(phi, sol.horizon());

  KineticPairing out;
  // χ(t,x,v) = 1 exactly on 0 < v ≤ u(t,x): each constancy region
  // contributes its v-column [0, value] in closed form.
  for_each_cell(sol, phi.bt.lo(), phi.bt.hi(), phi.bx.lo(), phi.bx.hi(),
                [&](double value, const std::vector<Point2>& poly) {
                  if (value == 0.0) return;
                  const GreenIntegrals g = polygon_green(phi, poly);
                  out.transport +=
                      psi.bv.integral_to(value) * g.d_t + psi.bv.moment1_to(value) * g.d_x;
                });

  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const FrontMeasure m = mu_on_front(sol, i);
    std::vector<double> cuts(psi.bv.knots().begin(), psi.bv.knots().end());
    const double kernel = integrate_1d(
        [&](double v) { return m.density(v) * psi.bv.deriv(v); }, m.u_lo, m.u_hi,
        std::move(cuts));
    if (kernel == 0.0) continue;
    out.mu_pairing += kernel * along_front(sol, sol.fronts()[i], phi);
  }
  return out;
}

int kinetic_sign() {
  static const int s = [] {
    const FrontSolution fixture = evolve_open({0.0}, {1.0, 0.0}, 1.0, Policy::keep());
    // The v-bump must not be symmetric about sigma or both pairings vanish.
    const TensorBump3 psi{Bump(0.25, 0.75), Bump(0.05, 0.45), Bump(0.1, 0.6)};
    const KineticPairing p = kinetic_pairing(fixture, psi);
    if (!(std::fabs(p.mu_pairing) > 1e-9) || !(std::fabs(p.transport) > 1e-9))
      throw DomainError("degenerate sign fixture");
    const int sign =
        std::fabs(p.transport - p.mu_pairing) <= std::fabs(p.transport + p.mu_pairing) ? 1 : -1;
    if (std::fabs(p.transport - sign * p.mu_pairing) > 1e-6 * std::fabs(p.transport))
      throw DomainError("kinetic pairing fixture does not pin a sign");
    return sign;
  }();
  return s;
}

double kinetic_residual(const FrontSolution& sol, const TensorBump3& psi) {
  const KineticPairing p = kinetic_pairing(sol, psi);
  return std::fabs(p.transport - kinetic_sign() * p.mu_pairing);
}

OneEntropyReport one_entropy_check(const FrontSolution& sol) {
  OneEntropyReport rep;
  rep.projection_identity = true;
  bool all_single = true;
  double max_quadratic_rate = 0.0;
  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const Front& f = sol.fronts()[i];
    const FrontMeasure m = mu_on_front(sol, i);
    OneEntropyRow row;
    row.front_id = i;
    row.single_signed = true;
    for (int k = 1; k < 32; ++k) {
      const double v = m.u_lo + (m.u_hi - m.u_lo) * k / 32.0;
      if (m.sign * m.density(v) < 0.0) row.single_signed = false;
    }
    row.signed_mass = m.total_mass();
    row.abs_mass = m.total_abs_mass();
    if (std::fabs(row.signed_mass) != row.abs_mass) rep.projection_identity = false;
    all_single = all_single && row.single_signed;
    rep.rows.push_back(row);
    if (m.duration() > 0.0) {
      if (f.cls == FrontClass::anti_entropic) rep.has_anti_front = true;
      max_quadratic_rate = std::max(max_quadratic_rate, quadratic_rate(f));
      // ν on a front equals the dissipation of v²/2 (upward) or -v²/2
      // (downward) restricted there.
      const double expected = f.cls == FrontClass::anti_entropic ? quadratic_rate(f)
                                                                 : -quadratic_rate(f);
      rep.max_restriction_error =
          std::max(rep.max_restriction_error, std::fabs(expected - nu_rate(f)));
    }
  }
  rep.projection_identity = rep.projection_identity && all_single;

  double x_lo = sol.initial_breaks().empty() ? 0.0 : sol.initial_breaks().front();
  double x_hi = sol.initial_breaks().empty() ? 0.0 : sol.initial_breaks().back();
  for (const Front& f : sol.fronts()) {
    for (double t : {std::max(f.t_birth, 0.0), std::min(f.t_death, sol.horizon())}) {
      x_lo = std::min(x_lo, f.position(t));
      x_hi = std::max(x_hi, f.position(t));
    }
  }
  const GridSpec2 spec{0.0, sol.horizon(), 16, x_lo - 1.0, x_hi + 1.0, 16};
  const GridMeasure gm = bin_measure(sol, spec);
  for (std::size_t i = 0; i < gm.front_abs_mass.size(); ++i)
    rep.grid_discrepancy =
        std::max(rep.grid_discrepancy, std::fabs(gm.front_abs_mass[i] - gm.projected_abs[i]));

  rep.quadratic_dissipation_nonpositive = max_quadratic_rate <= kGuard;
  rep.entropy_solution = !rep.has_anti_front;
  rep.consistent = rep.projection_identity && rep.grid_discrepancy == 0.0 &&
                   (rep.entropy_solution == rep.quadratic_dissipation_nonpositive);
  return rep;
}

std::vector<BallRatio> j_density_estimate(const FrontSolution& sol,
                                          const std::vector<Point2>& points,
                                          const std::vector<double>& radii) {
  std::vector<BallRatio> out;
  for (const Point2& p : points) {
    for (double r : radii) {
      if (!(r > 0.0)) throw DomainError("radius must be positive");
      double mass = 0.0;
      for (const Front& f : sol.fronts()) {
        const double a = std::max(f.t_birth, 0.0);
        const double b = std::min(f.t_death, sol.horizon());
        if (!(a < b)) continue;
        const double c = f.position(p.t) - p.x;  // offset at the ball center
        const double s2 = 1.0 + f.sigma * f.sigma;
        const double disc = s2 * r * r - c * c;
        if (disc <= 0.0) continue;
        const double root = std::sqrt(disc);
        const double lo = std::max(a, p.t + (-c * f.sigma - root) / s2);
        const double hi = std::min(b, p.t + (-c * f.sigma + root) / s2);
        if (hi > lo) mass += nu_rate(f) * (hi - lo);
      }
      out.push_back(BallRatio{p.t, p.x, r, mass / r});
    }
  }
  return out;
}

RectCheck rect_density_check(const FrontSolution& sol, const EntropyDescriptor& eta,
                             const TensorBump2& phi) {
  require_time_support_inside(phi, sol.horizon());
  for (const InteractionEvent& ev : sol.events())
    if (ev.time > phi.bt.lo() && ev.time < phi.bt.hi())
      throw DomainError("test function must avoid interaction times");

  RectCheck out;
  out.weak_form = weak_residual(sol, eta, phi);
  for (const Front& f : sol.fronts()) {
    // Left trace is the side the normal points into.
    const double up = f.u_l;
    const double um = f.u_r;
    const double lambda = f.sigma;
    const double len = std::sqrt(1.0 + lambda * lambda);
    const double nt = lambda / len;
    const double nx = -1.0 / len;
    const double density = (eta.eta(up) - eta.eta(um)) * nt + (eta.q(up) - eta.q(um)) * nx;
    // dH¹ = √(1+λ²) dt along the front.
    out.trace_form += density * len * along_front(sol, f, phi);
  }
  out.discrepancy = std::fabs(out.weak_form - out.trace_form);
  return out;
}

}  // namespace burgers
