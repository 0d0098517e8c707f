#pragma once

#include <cstddef>
#include <vector>

#include "burgers/front.hpp"
#include "burgers/policy.hpp"

namespace burgers {

/// One interaction: the incoming fronts die at (time, x) and the outgoing
/// fronts are born there.
struct InteractionEvent {
  double time = 0.0;
  double x = 0.0;
  std::vector<std::size_t> incoming;
  std::vector<std::size_t> outgoing;
};

/// Snapshot of the solution at a fixed time: jump positions left to right,
/// the states between them (one more than positions, tails included), and
/// the id of the front carrying each jump.
struct Slice {
  std::vector<double> positions;
  std::vector<double> values;
  std::vector<std::size_t> front_ids;
};

/// Piecewise-constant weak solution carried by straight-line fronts.
///
/// Fronts live on half-open intervals [t_birth, t_death). Between
/// consecutive event times the set of alive fronts and their spatial order
/// are constant; those intervals are the bands below. Adjacent fronts in a
/// band share their middle state exactly, and the outermost states equal the
/// tails of the initial data.
class FrontSolution {
 public:
  FrontSolution(std::vector<double> initial_breaks, std::vector<double> initial_values,
                std::vector<Front> fronts, std::vector<InteractionEvent> events,
                double horizon, Policy policy);

  const std::vector<double>& initial_breaks() const { return initial_breaks_; }
  const std::vector<double>& initial_values() const { return initial_values_; }
  const std::vector<Front>& fronts() const { return fronts_; }
  const std::vector<InteractionEvent>& events() const { return events_; }
  double horizon() const { return horizon_; }
  const Policy& policy() const { return policy_; }
  /// True when the initial data vanishes outside a bounded interval.
  bool compact_tails() const { return compact_tails_; }

  /// Left trace u(t, x-). On a front this is the state to its left.
  double evaluate(double t, double x) const;
  /// Right trace u(t, x+).
  double evaluate_right(double t, double x) const;

  Slice slice_at(double t) const;
  /// Ids of the fronts alive at t, ordered left to right.
  std::vector<std::size_t> alive_fronts(double t) const;

  /// Integral of u(t, .). Requires compact tails.
  double mass(double t) const;

  /// Band k covers [band_starts()[k], next start), the last one ending at
  /// the horizon inclusively.
  const std::vector<double>& band_starts() const { return band_starts_; }
  const std::vector<std::size_t>& band_fronts(std::size_t k) const { return band_order_[k]; }
  std::size_t band_count() const { return band_starts_.size(); }
  std::size_t band_of(double t) const;

  /// Re-runs the construction checks; throws DomainError on violation.
  void validate() const { check_(); }

 private:
  void build_bands_();
  void check_() const;

  std::vector<double> initial_breaks_;
  std::vector<double> initial_values_;
  std::vector<Front> fronts_;
  std::vector<InteractionEvent> events_;
  double horizon_ = 0.0;
  Policy policy_;
  bool compact_tails_ = false;
  std::vector<double> band_starts_;
  std::vector<std::vector<std::size_t>> band_order_;
};

}  // namespace burgers
