#pragma once

#include "burgers/common.hpp"

namespace burgers {

/// How upward jumps in the data are turned into fronts.
struct Policy {
  enum class Increasing { keep, rarefy };

  Increasing increasing = Increasing::keep;
  /// Maximum jump size after splitting, used only with rarefy.
  double delta = 0.0;

  static Policy keep() { return Policy{Increasing::keep, 0.0}; }

  static Policy rarefy(double delta) {
    if (!(delta > 0.0)) throw DomainError("rarefy step must be positive");
    return Policy{Increasing::rarefy, delta};
  }
};

}  // namespace burgers
