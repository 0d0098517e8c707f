#include "burgers/traces.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/common.hpp"
#include "burgers/geometry.hpp"

namespace burgers {

double TraceCurve::position(double t) const {
  if (t <= times.front()) return xs.front();
  if (t >= times.back()) return xs.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times.begin()) - 1;
  const double w = (t - times[k]) / (times[k + 1] - times[k]);
  return xs[k] + w * (xs[k + 1] - xs[k]);
}

TraceCurve TraceCurve::line(double t_start, double x_start, double t_end, double x_end) {
  if (!(t_end > t_start)) throw DomainError("curve needs a positive time span");
  return {{t_start, t_end}, {x_start, x_end}};
}

TraceCurve TraceCurve::from_front(const FrontSolution& sol, std::size_t front_id) {
  if (front_id >= sol.fronts().size()) throw UsageError("front id out of range");
  const Front& f = sol.fronts()[front_id];
  if (!(f.t_death > f.t_birth)) throw DomainError("front has an empty lifetime");
  return {{f.t_birth, f.t_death}, {f.position(f.t_birth), f.position(f.t_death)}};
}

TraceCurve TraceCurve::from_envelope(const EnvelopeCurve& curve) {
  if (curve.times.size() < 2) throw UsageError("envelope curve has too few samples");
  return {curve.times, curve.values};
}

namespace {

void validate_curve(const FrontSolution& sol, const TraceCurve& curve) {
  if (curve.times.size() < 2 || curve.times.size() != curve.xs.size())
    throw UsageError("curve needs matching times and positions, at least two each");
  for (std::size_t k = 0; k + 1 < curve.times.size(); ++k)
    if (!(curve.times[k] < curve.times[k + 1]))
      throw UsageError("curve times must increase strictly");
  if (curve.t0() < -kGuard || curve.t1() > sol.horizon() + kGuard)
    throw DomainError("curve exits the time domain");
}

/// |u(t, .) - trace| integrated exactly over [a, b] from one slice.
double banded_deviation(const Slice& s, double a, double b, double trace) {
  double acc = 0.0;
  auto lo = std::upper_bound(s.positions.begin(), s.positions.end(), a);
  double left = a;
  std::size_t cell = static_cast<std::size_t>(lo - s.positions.begin());
  while (cell < s.positions.size() && s.positions[cell] < b) {
    acc += std::fabs(s.values[cell] - trace) * (s.positions[cell] - left);
    left = s.positions[cell];
    ++cell;
  }
  acc += std::fabs(s.values[cell] - trace) * (b - left);
  return acc;
}

}  // namespace

TraceDecay trace_check(const FrontSolution& sol, const TraceCurve& curve, TraceSide side,
                       std::vector<double> deltas) {
  validate_curve(sol, curve);
  for (double d : deltas)
    if (!(d > 0.0)) throw DomainError("band widths must be positive");

  TraceDecay out;
  out.deltas = deltas;
  out.values.resize(deltas.size(), 0.0);

  for (std::size_t di = 0; di < deltas.size(); ++di) {
    const double delta = deltas[di];
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < curve.times.size(); ++k) {
      const double ta = curve.times[k];
      const double tb = curve.times[k + 1];
      const double xa = curve.xs[k];
      const double slope = (curve.xs[k + 1] - xa) / (tb - ta);

      // Integrand kinks: band changes, and fronts crossing the curve or
      // either band edge. Between consecutive splits it is affine in t.
      std::vector<double> splits;
      for (double t : sol.band_starts())
        if (t > ta && t < tb) splits.push_back(t);
      for (const Front& f : sol.fronts()) {
        const double m = f.sigma - slope;
        if (m == 0.0) continue;
        for (double offset : {0.0, delta, -delta}) {
          // f.position(t) == xa + slope*(t - ta) + offset
          const double gap = (xa + offset) - f.position(ta);
          const double t_cross = ta + gap / m;
          if (t_cross > ta && t_cross < tb) splits.push_back(t_cross);
        }
      }

      auto integrand = [&](double t) {
        const double x = xa + slope * (t - ta);
        const Slice s = sol.slice_at(t);
        if (side == TraceSide::right)
          return banded_deviation(s, x, x + delta, sol.evaluate_right(t, x)) / delta;
        return banded_deviation(s, x - delta, x, sol.evaluate(t, x)) / delta;
      };
      total += integrate_1d(integrand, ta, tb, splits);
    }
    out.values[di] = total;
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    num += deltas[i] * out.values[i];
    den += deltas[i] * deltas[i];
  }
  out.fitted_slope = den > 0.0 ? num / den : 0.0;
  return out;
}

}  // namespace burgers
