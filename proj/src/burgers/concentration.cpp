#include "burgers/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/front_measure.hpp"

namespace burgers {

namespace {

struct Interval {
  double lo;
  double hi;
};

/// Times in [lo, hi] where |front path - curve segment| <= eps. Both paths
/// are affine on the window, so the set is a single closed interval.
bool tube_overlap(const Front& f, double seg_t0, double seg_x0, double slope, double lo,
                  double hi, double eps, Interval& out) {
  if (!(hi > lo)) return false;
  const double g_lo = f.position(lo) - (seg_x0 + slope * (lo - seg_t0));
  const double m = f.sigma - slope;
  if (m == 0.0) {
    if (std::fabs(g_lo) > eps) return false;
    out = {lo, hi};
    return true;
  }
  double t_in = lo + (-eps - g_lo) / m;
  double t_out = lo + (eps - g_lo) / m;
  if (t_in > t_out) std::swap(t_in, t_out);
  out = {std::max(lo, t_in), std::min(hi, t_out)};
  return out.hi > out.lo;
}

double union_length(std::vector<Interval>& iv) {
  if (iv.empty()) return 0.0;
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double len = 0.0;
  double cur_lo = iv.front().lo;
  double cur_hi = iv.front().hi;
  for (std::size_t i = 1; i < iv.size(); ++i) {
    if (iv[i].lo <= cur_hi) {
      cur_hi = std::max(cur_hi, iv[i].hi);
    } else {
      len += cur_hi - cur_lo;
      cur_lo = iv[i].lo;
      cur_hi = iv[i].hi;
    }
  }
  return len + (cur_hi - cur_lo);
}

}  // namespace

ConcentrationReport concentration_report(const FrontSolution& sol, const CurveFamily& family,
                                         const std::vector<double>& epsilons) {
  double total = 0.0;
  for (const Front& f : sol.fronts())
    if (f.cls == FrontClass::entropic) total += nu_rate(f) * (f.t_death - f.t_birth);

  ConcentrationReport report;
  for (double eps : epsilons) {
    TubeFraction row;
    row.epsilon = eps;
    row.total = total;
    if (total == 0.0) {
      row.vacuous = true;
      report.rows.push_back(row);
      continue;
    }
    for (const Front& f : sol.fronts()) {
      if (f.cls != FrontClass::entropic) continue;
      std::vector<Interval> covered;
      for (const EnvelopeCurve& c : family.curves) {
        for (std::size_t k = 0; k + 1 < c.times.size(); ++k) {
          const double lo = std::max(c.times[k], f.t_birth);
          const double hi = std::min(c.times[k + 1], f.t_death);
          const double slope = (c.values[k + 1] - c.values[k]) / (c.times[k + 1] - c.times[k]);
          Interval iv;
          if (tube_overlap(f, c.times[k], c.values[k], slope, lo, hi, eps, iv))
            covered.push_back(iv);
        }
      }
      row.captured += nu_rate(f) * union_length(covered);
    }
    row.fraction = row.captured / row.total;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace burgers
