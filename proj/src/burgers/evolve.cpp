#include "burgers/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "burgers/riemann.hpp"

namespace burgers {

namespace {

constexpr double kNever = std::numeric_limits<double>::infinity();

double intercept(const Front& f) { return f.x_birth - f.sigma * f.t_birth; }

/// Crossing time of two adjacent fronts, clamped below to now (the pair is
/// ordered at t_now, so an earlier fp crossing means they touch already).
double pair_time(const Front& l, const Front& r, double t_now) {
  if (!(l.sigma > r.sigma)) return kNever;
  const double t = (intercept(r) - intercept(l)) / (l.sigma - r.sigma);
  return std::max({t, t_now, l.t_birth, r.t_birth});
}

FrontSolution run(std::vector<double> breaks, std::vector<double> values, double horizon,
                  const Policy& policy, const EvolveLimits& limits) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be positive");
  if (values.size() != breaks.size() + 1)
    throw DomainError("initial data needs one more value than breakpoints");

  std::vector<Front> fronts;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    for (const FrontBirth& b : riemann_resolve(values[i], values[i + 1], policy)) {
      Front f;
      f.t_birth = 0.0;
      f.t_death = kNever;
      f.x_birth = breaks[i];
      f.u_l = b.u_l;
      f.u_r = b.u_r;
      f.sigma = b.sigma;
      f.cls = b.cls;
      active.push_back(fronts.size());
      fronts.push_back(f);
    }
  }

  std::vector<InteractionEvent> events;
  const double guard = kGuard * (1.0 + horizon);
  double t_now = 0.0;
  while (active.size() >= 2) {
    double t_star = kNever;
    for (std::size_t k = 0; k + 1 < active.size(); ++k)
      t_star = std::min(t_star, pair_time(fronts[active[k]], fronts[active[k + 1]], t_now));
    if (!(t_star < horizon - guard)) break;

    std::vector<char> hit(active.size() - 1, 0);
    for (std::size_t k = 0; k + 1 < active.size(); ++k)
      hit[k] = pair_time(fronts[active[k]], fronts[active[k + 1]], t_now) <= t_star + guard;

    std::vector<std::size_t> next_active;
    std::size_t k = 0;
    while (k < active.size()) {
      if (k + 1 >= active.size() || !hit[k]) {
        next_active.push_back(active[k]);
        ++k;
        continue;
      }
      std::size_t j = k + 1;
      while (j + 1 < active.size() && hit[j]) ++j;
      // Cluster active[k..j] meets at one point; outer states survive.
      const double u_l = fronts[active[k]].u_l;
      const double u_r = fronts[active[j]].u_r;
      const double x_star =
          0.5 * (fronts[active[k]].position(t_star) + fronts[active[j]].position(t_star));
      InteractionEvent ev;
      ev.time = t_star;
      ev.x = x_star;
      for (std::size_t i = k; i <= j; ++i) {
        fronts[active[i]].t_death = t_star;
        ev.incoming.push_back(active[i]);
      }
      for (const FrontBirth& b : riemann_resolve(u_l, u_r, policy)) {
        Front f;
        f.t_birth = t_star;
        f.t_death = kNever;
        f.x_birth = x_star;
        f.u_l = b.u_l;
        f.u_r = b.u_r;
        f.sigma = b.sigma;
        f.cls = b.cls;
        ev.outgoing.push_back(fronts.size());
        next_active.push_back(fronts.size());
        fronts.push_back(f);
      }
      events.push_back(std::move(ev));
      if (events.size() > limits.max_events) throw ResourceError("interaction limit exceeded");
      k = j + 1;
    }
    active.swap(next_active);
    t_now = t_star;
  }

  for (Front& f : fronts)
    if (!std::isfinite(f.t_death)) f.t_death = horizon;
  return FrontSolution(std::move(breaks), std::move(values), std::move(fronts),
                       std::move(events), horizon, policy);
}

}  // namespace

FrontSolution evolve(const Profile& u0, double horizon, const Policy& policy,
                     const EvolveLimits& limits) {
  Profile checked = Profile::checked(u0.breakpoints, u0.values);
  return run(std::move(checked.breakpoints), std::move(checked.values), horizon, policy, limits);
}

FrontSolution evolve_open(std::vector<double> breaks, std::vector<double> values, double horizon,
                          const Policy& policy, const EvolveLimits& limits) {
  return run(std::move(breaks), std::move(values), horizon, policy, limits);
}

OleinikReport oleinik_report(const FrontSolution& sol, double t) {
  OleinikReport rep;
  const Slice s = sol.slice_at(t);
  const double gap_guard = kGuard * (1.0 + sol.horizon());
  for (std::size_t j = 1; j < s.positions.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double dx = s.positions[j] - s.positions[i];
      if (dx <= gap_guard) continue;
      // Left trace at positions[i] is values[i].
      rep.quotient = std::max(rep.quotient, (s.values[j] - s.values[i]) / dx);
    }
  }
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
    rep.largest_upward_jump = std::max(rep.largest_upward_jump, s.values[i + 1] - s.values[i]);
  const double tol = sol.policy().increasing == Policy::Increasing::rarefy
                         ? sol.policy().delta * (1.0 + 1e-9)
                         : kGuard;
  rep.unbounded = rep.largest_upward_jump > tol;
  return rep;
}

}  // namespace burgers
