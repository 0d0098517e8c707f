#pragma once

#include <vector>

#include "burgers/front.hpp"
#include "burgers/policy.hpp"

namespace burgers {

/// States and speed for one front to be born; position and time are supplied
/// by the caller.
struct FrontBirth {
  double u_l = 0.0;
  double u_r = 0.0;
  double sigma = 0.0;
  FrontClass cls = FrontClass::entropic;
};

/// Fronts emitted at a jump from u_l to u_r, ordered by speed. A downward
/// jump yields a single entropic front. An upward jump yields one
/// anti-entropic front under keep, or ceil((u_r-u_l)/delta) equal pieces
/// under rarefy. Equal states yield nothing.
std::vector<FrontBirth> riemann_resolve(double u_l, double u_r, const Policy& policy);

}  // namespace burgers
