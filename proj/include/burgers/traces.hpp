#pragma once

#include <cstddef>
#include <vector>

#include "burgers/envelope.hpp"
#include "burgers/front_solution.hpp"

namespace burgers {

/// Piecewise-linear curve t -> x on a closed time interval inside [0, T].
struct TraceCurve {
  std::vector<double> times;  // strictly increasing, size >= 2
  std::vector<double> xs;

  double position(double t) const;
  double t0() const { return times.front(); }
  double t1() const { return times.back(); }

  static TraceCurve line(double t_start, double x_start, double t_end, double x_end);
  /// The front's path over its lifetime clipped to the horizon.
  static TraceCurve from_front(const FrontSolution& sol, std::size_t front_id);
  static TraceCurve from_envelope(const EnvelopeCurve& curve);
};

enum class TraceSide { left, right };

/// Averaged one-sided deviation from the curve's trace per band width delta:
///   F(delta) = (1/delta) * integral over t of integral over y in (0, delta]
///              of |u(t, x(t) +- y) - trace(t)| dy dt
/// with trace(t) the one-sided limit of u at the curve. Inner integrals are
/// exact; the outer integral is split at every kink and front crossing, so
/// the quadrature is exact for piecewise-constant solutions.
struct TraceDecay {
  std::vector<double> deltas;
  std::vector<double> values;
  double fitted_slope = 0.0;  // least-squares slope of F(delta) through 0
};

TraceDecay trace_check(const FrontSolution& sol, const TraceCurve& curve, TraceSide side,
                       std::vector<double> deltas);

}  // namespace burgers
