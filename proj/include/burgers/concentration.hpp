#pragma once

#include <vector>

#include "burgers/envelope.hpp"
#include "burgers/front_solution.hpp"

namespace burgers {

/// Mass accounting of the entropic-front dissipation against one tube radius.
struct TubeFraction {
  double epsilon = 0.0;
  double captured = 0.0;
  double total = 0.0;
  double fraction = 1.0;  // 1.0 when total == 0 (vacuous pass)
  bool vacuous = false;
};

struct ConcentrationReport {
  std::vector<TubeFraction> rows;
};

/// Fraction of the x-projected negative dissipation mass lying within
/// distance epsilon of some family curve, per epsilon. Intersections of a
/// front path with each tube are computed exactly per curve segment; a
/// curve covers only times past its anchor. The positive side is obtained
/// by running this on the time-reversed solution and its own family.
ConcentrationReport concentration_report(const FrontSolution& sol, const CurveFamily& family,
                                         const std::vector<double>& epsilons);

}  // namespace burgers
