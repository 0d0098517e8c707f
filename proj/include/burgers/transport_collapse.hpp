#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "burgers/front_solution.hpp"
#include "burgers/profile.hpp"

namespace burgers {

/// Splitting-scheme parameters: free transport for time tau, then columnwise
/// downward compaction on columns of width dx with level height dv.
struct TCParams {
  double tau = 0.0;
  double dx = 0.0;
  double dv = 0.0;
  double horizon = 0.0;
  /// Spatial box. NaN derives [first break, last break + horizon + dx] from
  /// the data; open data with nonzero tails needs an explicit box.
  double x_lo = std::numeric_limits<double>::quiet_NaN();
  double x_hi = std::numeric_limits<double>::quiet_NaN();
};

/// Level change applied by one compaction.
struct TCJump {
  double time;
  double v_before;
  double v_after;
};

/// One level particle. Between compactions it moves ballistically at its
/// current v; jumps happen only at step boundaries.
struct TCParticle {
  double weight = 0.0;
  double x0 = 0.0;
  double v0 = 0.0;
  double x = 0.0;
  double v = 0.0;
  std::vector<TCJump> jumps;
};

struct TCResult {
  /// Step boundary times, starting at 0 and ending at the horizon.
  std::vector<double> times;
  double x_lo = 0.0;
  double dx = 0.0;
  std::size_t n_cols = 0;
  /// Reconstructed profile per step: in-box particle count per column times dv.
  std::vector<std::vector<double>> values_per_step;
  std::vector<TCParticle> particles;
  bool cfl_warning = false;
  std::size_t jump_count = 0;

  /// Reconstructed value at x after step `step` (0 outside the box).
  double value_at(std::size_t step, double x) const;
};

TCResult transport_collapse(const Profile& initial, const TCParams& params);

/// Same scheme on open piecewise-constant data: `values` has one more entry
/// than `breaks`, tails extend to infinity and are truncated at the box.
TCResult transport_collapse_open(std::vector<double> breaks, std::vector<double> values,
                                 const TCParams& params);

/// Exact L1 distance over [lo, hi] between the scheme profile after `step`
/// and the front solution at the matching time.
double l1_distance(const TCResult& tc, std::size_t step, const FrontSolution& sol,
                   double lo, double hi);

}  // namespace burgers
