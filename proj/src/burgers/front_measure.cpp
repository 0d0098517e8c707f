#include "burgers/front_measure.hpp"

#include <algorithm>
#include <cmath>

namespace burgers {

double FrontMeasure::integral_to(double v) const {
  const double s = std::clamp(v, u_lo, u_hi);
  const double a = u_lo;
  const double b = u_hi;
  auto anti = [&](double y) {
    // Antiderivative of (b - y)(y - a)/2.
    return (-y * y * y / 3.0 + (a + b) * y * y * 0.5 - a * b * y) * 0.5;
  };
  return sign * (anti(s) - anti(a));
}

namespace {

FrontMeasure measure_for(const Front& f, std::size_t id, double horizon) {
  FrontMeasure m;
  m.front_id = id;
  m.u_lo = std::min(f.u_l, f.u_r);
  m.u_hi = std::max(f.u_l, f.u_r);
  m.sign = f.cls == FrontClass::entropic ? -1.0 : 1.0;
  m.t0 = std::max(f.t_birth, 0.0);
  m.t1 = std::min(f.t_death, horizon);
  return m;
}

}  // namespace

FrontMeasure mu_on_front(const FrontSolution& sol, std::size_t front_id) {
  if (front_id >= sol.fronts().size()) throw DomainError("unknown front id");
  return measure_for(sol.fronts()[front_id], front_id, sol.horizon());
}

FrontMeasure front_measure_from_states(double u_l, double u_r) {
  if (u_l == u_r) throw DomainError("degenerate front: equal states carry no measure");
  Front f = Front::make(0.0, 0.0, u_l, u_r);
  f.t_death = 1.0;
  return measure_for(f, 0, 1.0);
}

std::vector<FrontMeasure> kinetic_measure(const FrontSolution& sol) {
  std::vector<FrontMeasure> out;
  out.reserve(sol.fronts().size());
  for (std::size_t i = 0; i < sol.fronts().size(); ++i)
    out.push_back(measure_for(sol.fronts()[i], i, sol.horizon()));
  return out;
}

double nu_rate(const Front& f) {
  const double d = std::fabs(f.u_r - f.u_l);
  return d * d * d / 12.0;
}

std::vector<NuRow> nu_measure(const FrontSolution& sol) {
  std::vector<NuRow> out;
  out.reserve(sol.fronts().size());
  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const Front& f = sol.fronts()[i];
    NuRow row;
    row.front_id = i;
    row.rate = nu_rate(f);
    row.total = row.rate * (std::min(f.t_death, sol.horizon()) - std::max(f.t_birth, 0.0));
    out.push_back(row);
  }
  return out;
}

double nu_total(const FrontSolution& sol) {
  double acc = 0.0;
  for (const NuRow& r : nu_measure(sol)) acc += r.total;
  return acc;
}

}  // namespace burgers
