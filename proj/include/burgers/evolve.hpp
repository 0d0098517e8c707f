#pragma once

#include <cstddef>
#include <vector>

#include "burgers/front_solution.hpp"
#include "burgers/profile.hpp"

namespace burgers {

struct EvolveLimits {
  std::size_t max_events = 100000;
};

/// Runs front tracking for u0 up to the horizon. All interactions strictly
/// inside the horizon are resolved; fronts still alive there end at the
/// horizon. Simultaneous interactions are processed left to right.
FrontSolution evolve(const Profile& u0, double horizon, const Policy& policy,
                     const EvolveLimits& limits = {});

/// Same loop for data with arbitrary (possibly nonzero) constant tails.
/// values has one more entry than breaks, all in [0,1], adjacent distinct.
FrontSolution evolve_open(std::vector<double> breaks, std::vector<double> values,
                          double horizon, const Policy& policy,
                          const EvolveLimits& limits = {});

/// One-sided steepness of a slice. quotient is the largest difference
/// quotient of left traces over pairs of distinct jump positions (0 with
/// fewer than two jumps). unbounded reports an upward jump beyond the
/// granularity the policy can produce, i.e. a genuine steepness blowup.
struct OleinikReport {
  double quotient = 0.0;
  bool unbounded = false;
  double largest_upward_jump = 0.0;
};

OleinikReport oleinik_report(const FrontSolution& sol, double t);

}  // namespace burgers
