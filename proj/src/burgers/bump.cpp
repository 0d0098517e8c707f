#include "burgers/bump.hpp"

#include <cmath>

namespace burgers {

namespace {

constexpr double kBinom[6] = {1.0, -5.0, 10.0, -10.0, 5.0, -1.0};
// Peak of the unnormalized spline at the midpoint y = 2.5.
constexpr double kPeak = 14.375 / 24.0;

double pow4(double x) { return (x * x) * (x * x); }

}  // namespace

Bump::Bump(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo < hi)) throw DomainError("bump needs lo < hi");
  w_ = (hi - lo) / 5.0;
}

double Bump::value(double x) const {
  if (x <= lo_ || x >= hi_) return 0.0;
  const double y = (x - lo_) / w_;
  double acc = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double d = y - k;
    if (d <= 0.0) break;
    acc += kBinom[k] * pow4(d);
  }
  return acc / (24.0 * kPeak);
}

double Bump::deriv(double x) const {
  if (x <= lo_ || x >= hi_) return 0.0;
  const double y = (x - lo_) / w_;
  double acc = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double d = y - k;
    if (d <= 0.0) break;
    acc += kBinom[k] * 4.0 * d * d * d;
  }
  return acc / (24.0 * kPeak * w_);
}

double Bump::integral_to(double x) const {
  if (x <= lo_) return 0.0;
  const double y = std::min((x - lo_) / w_, 5.0);
  double acc = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double d = y - k;
    if (d <= 0.0) break;
    acc += kBinom[k] * pow4(d) * d / 5.0;
  }
  return acc * w_ / (24.0 * kPeak);
}

double Bump::moment1_to(double x) const {
  if (x <= lo_) return 0.0;
  const double y = std::min((x - lo_) / w_, 5.0);
  // t = lo + w·y, so ∫t·B dy-parts split into lo·∫B + w·∫y·B.
  double b5 = 0.0;   // Σ coef·(y-k)⁵/5
  double yb = 0.0;   // Σ coef·((y-k)⁶/6 + k(y-k)⁵/5)
  for (int k = 0; k < 6; ++k) {
    const double d = y - k;
    if (d <= 0.0) break;
    const double d5 = pow4(d) * d;
    b5 += kBinom[k] * d5 / 5.0;
    yb += kBinom[k] * (d5 * d / 6.0 + k * d5 / 5.0);
  }
  return (lo_ * b5 + w_ * yb) * w_ / (24.0 * kPeak);
}

std::array<double, 6> Bump::knots() const {
  std::array<double, 6> k;
  for (int i = 0; i < 6; ++i) k[i] = lo_ + w_ * i;
  k[5] = hi_;
  return k;
}

}  // namespace burgers
