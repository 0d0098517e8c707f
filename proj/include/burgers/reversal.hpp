#pragma once

#include <cstddef>

#include "burgers/front_solution.hpp"

namespace burgers {

/// Time reversal (t,x) -> (T-t,-x) with per-front duality checks.
/// Front i of the reversed solution mirrors front i of the input: states
/// swapped, same speed, class flipped, lifetime reflected. Positive
/// dissipation of the input equals negative dissipation of the reversal.
struct ReversalReport {
  FrontSolution reversed;
  std::size_t front_count = 0;
  std::size_t class_swap_violations = 0;
  double max_rate_diff = 0.0;            // per-front dissipation line density
  double mu_plus_total = 0.0;            // input, positive part
  double mu_minus_total_reversed = 0.0;  // reversal, negative part
};

ReversalReport time_reversal(const FrontSolution& sol);

}  // namespace burgers
