#include "burgers/entropy.hpp"

#include <cmath>

namespace burgers {

EntropyDescriptor EntropyDescriptor::from_second_derivative(std::vector<double> samples,
                                                            std::string id) {
  if (samples.size() < 2) throw DomainError("entropy needs at least two curvature samples");
  for (double g : samples)
    if (!std::isfinite(g)) throw DomainError("entropy curvature must be finite");
  EntropyDescriptor e;
  e.id_ = std::move(id);
  e.g_ = std::move(samples);
  const std::size_t n = e.g_.size();
  e.h_ = 1.0 / static_cast<double>(n - 1);
  e.convex_ = true;
  for (double g : e.g_)
    if (g < 0.0) e.convex_ = false;

  // Exact antiderivatives of the piecewise-linear curvature, accumulated
  // cell by cell: within a cell g(s) = g_i + c·s, s = v - v_i.
  e.etap_.assign(n, 0.0);
  e.eta_.assign(n, 0.0);
  e.q_.assign(n, 0.0);
  const double h = e.h_;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gi = e.g_[i];
    const double c = (e.g_[i + 1] - gi) / h;
    const double vi = h * static_cast<double>(i);
    const double ep = e.etap_[i];
    e.etap_[i + 1] = ep + h * (gi + e.g_[i + 1]) * 0.5;
    e.eta_[i + 1] = e.eta_[i] + ep * h + h * h * (2.0 * gi + e.g_[i + 1]) / 6.0;
    // q' = eta'(v)·v = (ep + gi·s + c·s²/2)(vi + s)
    e.q_[i + 1] = e.q_[i] + ep * vi * h + (ep + gi * vi) * h * h * 0.5 +
                  (gi + 0.5 * c * vi) * h * h * h / 3.0 + c * h * h * h * h / 8.0;
  }
  return e;
}

EntropyDescriptor EntropyDescriptor::quadratic(std::size_t n) {
  return from_second_derivative(std::vector<double>(n, 1.0), "quadratic");
}

EntropyDescriptor EntropyDescriptor::minus_quadratic(std::size_t n) {
  return from_second_derivative(std::vector<double>(n, -1.0), "minus_quadratic");
}

EntropyDescriptor EntropyDescriptor::linear(std::size_t n) {
  return from_second_derivative(std::vector<double>(n, 0.0), "linear");
}

std::size_t EntropyDescriptor::cell_(double v, double& s) const {
  const std::size_t n = g_.size();
  double clamped = v;
  if (clamped < 0.0) clamped = 0.0;
  if (clamped > 1.0) clamped = 1.0;
  std::size_t i = static_cast<std::size_t>(clamped / h_);
  if (i > n - 2) i = n - 2;
  s = clamped - h_ * static_cast<double>(i);
  return i;
}

double EntropyDescriptor::eta_pp(double v) const {
  double s;
  const std::size_t i = cell_(v, s);
  return g_[i] + (g_[i + 1] - g_[i]) * (s / h_);
}

double EntropyDescriptor::eta_p(double v) const {
  double s;
  const std::size_t i = cell_(v, s);
  const double c = (g_[i + 1] - g_[i]) / h_;
  return etap_[i] + g_[i] * s + 0.5 * c * s * s;
}

double EntropyDescriptor::eta(double v) const {
  double s;
  const std::size_t i = cell_(v, s);
  const double c = (g_[i + 1] - g_[i]) / h_;
  return eta_[i] + etap_[i] * s + 0.5 * g_[i] * s * s + c * s * s * s / 6.0;
}

double EntropyDescriptor::q(double v) const {
  double s;
  const std::size_t i = cell_(v, s);
  const double c = (g_[i + 1] - g_[i]) / h_;
  const double vi = h_ * static_cast<double>(i);
  return q_[i] + etap_[i] * vi * s + (etap_[i] + g_[i] * vi) * s * s * 0.5 +
         (g_[i] + 0.5 * c * vi) * s * s * s / 3.0 + c * s * s * s * s / 8.0;
}

EntropyDescriptor random_convex_entropy(Rng& rng, std::size_t tag, double scale,
                                        std::size_t grid) {
  const std::size_t m = 5 + rng.index(8);
  std::vector<double> ctrl(m);
  for (double& c : ctrl) c = rng.uniform(0.0, scale);
  std::vector<double> fine(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double y = static_cast<double>(i) / static_cast<double>(grid - 1) *
                     static_cast<double>(m - 1);
    const std::size_t j = std::min(m - 2, static_cast<std::size_t>(y));
    const double s = y - static_cast<double>(j);
    fine[i] = ctrl[j] * (1.0 - s) + ctrl[j + 1] * s;
  }
  return EntropyDescriptor::from_second_derivative(std::move(fine),
                                                   "convex" + std::to_string(tag));
}

}  // namespace burgers
