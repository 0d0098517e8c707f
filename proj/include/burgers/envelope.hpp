#pragma once

#include <cstddef>
#include <vector>

#include "burgers/front_solution.hpp"
#include "burgers/lagrangian.hpp"

namespace burgers {

/// Running maximum of the selected characteristics, sampled on [anchor_t, T].
/// Selection: trajectories of positive weight with x(anchor_t) < anchor_x.
/// With an empty selection the curve is the horizontal line x = anchor_x.
/// Values are 1-Lipschitz with slopes in [0,1] and value_at(anchor_t) <= anchor_x.
struct EnvelopeCurve {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  double anchor_t = 0.0;
  double anchor_x = 0.0;
  std::vector<double> times;
  std::vector<double> values;
  /// Trajectory achieving the maximum at each sample (smallest id on ties);
  /// kNone everywhere when the selection is empty.
  std::vector<std::size_t> argmax;
  std::size_t selected = 0;

  /// Linear interpolation; clamps to the end values outside [times.front(), times.back()].
  double value_at(double t) const;
};

struct AnchorGrid {
  std::vector<double> anchor_ts;
  std::vector<double> anchor_xs;
  std::size_t samples_per_curve = 65;

  static AnchorGrid uniform(std::size_t n_t, double t_lo, double t_hi, std::size_t n_x,
                            double x_lo, double x_hi, std::size_t samples_per_curve = 65);
};

/// Deduplicated envelope family over a finite anchor grid; the computable
/// stand-in for the countable candidate set carrying the negative dissipation.
struct CurveFamily {
  std::vector<EnvelopeCurve> curves;
  std::size_t raw_count = 0;
  double dedup_tol = 0.0;
};

EnvelopeCurve envelope_curve(const LagrangianRep& rep_h, const FrontSolution& sol,
                             double anchor_t, double anchor_x, std::size_t n_samples = 65);

/// Max weighted mass, over sample times, of selected trajectories found on the
/// wrong side of the envelope. The hypograph side is zero by construction;
/// the epigraph side is bounded by the sampling resolution.
struct SeparationReport {
  double hypo_violation_mass = 0.0;
  double epi_violation_mass = 0.0;
};

SeparationReport separation_check(const LagrangianRep& rep_h, const LagrangianRep& rep_e,
                                  const FrontSolution& sol, const EnvelopeCurve& f,
                                  double anchor_t, double anchor_x);

/// One envelope per grid anchor, deduplicated: a curve agreeing with an
/// already-kept curve within dedup_tol on their common domain is dropped.
/// dedup_tol <= 0 picks 2 sample cells of the representation.
CurveFamily build_J_minus(const LagrangianRep& rep_h, const FrontSolution& sol,
                          const AnchorGrid& grid, double dedup_tol = 0.0);

struct NoCrossingReport {
  std::size_t checked = 0;
  std::size_t strict_violations = 0;
  std::size_t near_ties = 0;
  double tolerance = 0.0;
};

/// Samples (hypograph, epigraph) trajectory pairs ordered at a random base
/// time and counts later order reversals. Reversals deeper than one sample
/// cell are strict violations; shallower ones are near ties.
NoCrossingReport no_crossing_sample(const LagrangianRep& rep_h, const LagrangianRep& rep_e,
                                    std::size_t samples, std::uint64_t seed = 1234);

}  // namespace burgers
