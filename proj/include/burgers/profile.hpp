#pragma once

#include <vector>

#include "burgers/common.hpp"

namespace burgers {

/// Piecewise-constant initial datum. values has one more entry than
/// breakpoints; the first and last value are zero, all values lie in [0,1],
/// and adjacent values are distinct.
struct Profile {
  std::vector<double> breakpoints;
  std::vector<double> values;

  /// Validates the invariants above and returns the profile. Throws
  /// DomainError on violation.
  static Profile checked(std::vector<double> breakpoints, std::vector<double> values);

  /// Merges equal adjacent values and zero-width intervals, then validates.
  static Profile normalized(std::vector<double> breakpoints, std::vector<double> values);

  /// Value just left of x (left trace).
  double value_at(double x) const;

  double integral() const;

  double x_min() const { return breakpoints.front(); }
  double x_max() const { return breakpoints.back(); }
};

}  // namespace burgers
