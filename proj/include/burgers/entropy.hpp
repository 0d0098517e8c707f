#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "burgers/common.hpp"

namespace burgers {

/// Entropy carried by samples of its second derivative on a uniform v-grid
/// over [0,1]. The semantic curvature is the piecewise-linear interpolant of
/// the samples; eta' , eta and q are its exact antiderivatives with
/// eta(0) = q(0) = 0 and eta'(0) = 0, and q'(v) = eta'(v)·v. Affine parts of
/// an entropy are invisible to this representation; they dissipate nothing.
class EntropyDescriptor {
 public:
  static EntropyDescriptor from_second_derivative(std::vector<double> samples, std::string id);

  /// eta'' = 1, i.e. eta = v²/2 and q = v³/3 up to grid rounding.
  static EntropyDescriptor quadratic(std::size_t n = 1025);
  static EntropyDescriptor minus_quadratic(std::size_t n = 1025);
  /// eta'' = 0: the representative of every affine entropy.
  static EntropyDescriptor linear(std::size_t n = 1025);

  const std::string& id() const { return id_; }
  std::size_t size() const { return g_.size(); }
  const std::vector<double>& samples() const { return g_; }
  bool convex() const { return convex_; }

  double eta_pp(double v) const;
  double eta_p(double v) const;
  double eta(double v) const;
  double q(double v) const;

  /// Exact integral of eta''(v)·w(v) over [a,b] ⊂ [0,1], where w is any
  /// polynomial of degree ≤ 4 (integrated cell by cell, Gauss order 3).
  template <class W>
  double integrate_against_curvature(double a, double b, W&& w) const;

 private:
  EntropyDescriptor() = default;
  std::size_t cell_(double v, double& s) const;

  std::string id_;
  std::vector<double> g_;      // eta'' samples
  std::vector<double> etap_;   // eta' at grid points
  std::vector<double> eta_;    // eta at grid points
  std::vector<double> q_;      // q at grid points
  double h_ = 0.0;
  bool convex_ = false;
};

/// Nonnegative piecewise-linear curvature from a few seeded control points,
/// upsampled to a uniform grid. Deterministic for a given rng state.
EntropyDescriptor random_convex_entropy(Rng& rng, std::size_t tag, double scale = 3.0,
                                        std::size_t grid = 257);

template <class W>
double EntropyDescriptor::integrate_against_curvature(double a, double b, W&& w) const {
  if (!(a <= b)) return -integrate_against_curvature(b, a, w);
  // Gauss-Legendre 3, exact through degree 5 per grid cell.
  static constexpr double kNode = 0.7745966692414834;  // sqrt(3/5)
  static constexpr double kW0 = 0.8888888888888888;
  static constexpr double kW1 = 0.5555555555555556;
  double acc = 0.0;
  const std::size_t n = g_.size();
  double lo = a;
  while (lo < b) {
    const std::size_t i = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(0.0, lo / h_)), n - 2);
    const double cell_hi = std::min(b, h_ * static_cast<double>(i + 1));
    const double hi = cell_hi > lo ? cell_hi : b;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double vs[3] = {mid - half * kNode, mid, mid + half * kNode};
    const double ws[3] = {kW1, kW0, kW1};
    for (int k = 0; k < 3; ++k) acc += half * ws[k] * eta_pp(vs[k]) * w(vs[k]);
    lo = hi;
  }
  return acc;
}

}  // namespace burgers
