#include "burgers/riemann.hpp"

#include <cmath>

namespace burgers {

namespace {

FrontBirth birth(double u_l, double u_r) {
  FrontBirth b;
  b.u_l = u_l;
  b.u_r = u_r;
  b.sigma = 0.5 * (u_l + u_r);
  b.cls = u_l > u_r ? FrontClass::entropic : FrontClass::anti_entropic;
  return b;
}

}  // namespace

std::vector<FrontBirth> riemann_resolve(double u_l, double u_r, const Policy& policy) {
  std::vector<FrontBirth> out;
  if (u_l == u_r) return out;
  if (u_l > u_r || policy.increasing == Policy::Increasing::keep) {
    out.push_back(birth(u_l, u_r));
    return out;
  }
  const double gap = u_r - u_l;
  // Small backoff keeps exact multiples (gap == k*delta) at k pieces.
  int n = static_cast<int>(std::ceil(gap / policy.delta - 1e-12));
  if (n < 1) n = 1;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double a = u_l + gap * static_cast<double>(i) / n;
    double b = i + 1 == n ? u_r : u_l + gap * static_cast<double>(i + 1) / n;
    out.push_back(birth(a, b));
  }
  return out;
}

}  // namespace burgers
