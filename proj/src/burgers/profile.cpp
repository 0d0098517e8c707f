#include "burgers/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace burgers {

namespace {

void validate(const Profile& p) {
  if (p.breakpoints.empty()) throw DomainError("profile needs at least one breakpoint");
  if (p.values.size() != p.breakpoints.size() + 1)
    throw DomainError("profile needs one more value than breakpoints");
  for (std::size_t i = 1; i < p.breakpoints.size(); ++i)
    if (!(p.breakpoints[i - 1] < p.breakpoints[i]))
      throw DomainError("profile breakpoints must be strictly increasing");
  if (p.values.front() != 0.0 || p.values.back() != 0.0)
    throw DomainError("profile must vanish outside a bounded interval");
  for (double v : p.values) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw DomainError("profile values must lie in [0,1]");
  }
  for (std::size_t i = 1; i < p.values.size(); ++i)
    if (p.values[i - 1] == p.values[i])
      throw DomainError("adjacent profile values must differ at breakpoint " + std::to_string(i - 1));
}

}  // namespace

Profile Profile::checked(std::vector<double> breakpoints, std::vector<double> values) {
  Profile p{std::move(breakpoints), std::move(values)};
  validate(p);
  return p;
}

Profile Profile::normalized(std::vector<double> breakpoints, std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1)
    throw DomainError("profile needs one more value than breakpoints");
  // Snap tiny values to zero so round-tripped data keeps exact zero tails.
  for (double& v : values)
    if (std::fabs(v) <= 1e-15) v = 0.0;
  std::vector<double> bp, vv;
  vv.push_back(values.front());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!bp.empty() && !(bp.back() < breakpoints[i])) {
      // Zero-width cell: its value never appears, drop it.
      vv.back() = values[i + 1];
      if (vv.size() >= 2 && vv[vv.size() - 2] == vv.back()) {
        vv.pop_back();
        bp.pop_back();
      }
      continue;
    }
    if (values[i + 1] == vv.back()) continue;  // merge equal neighbours
    bp.push_back(breakpoints[i]);
    vv.push_back(values[i + 1]);
  }
  return checked(std::move(bp), std::move(vv));
}

double Profile::value_at(double x) const {
  // Left trace: the value on the cell whose closure contains x from the left.
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

double Profile::integral() const {
  double acc = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    acc += values[i] * (breakpoints[i] - breakpoints[i - 1]);
  return acc;
}

}  // namespace burgers
