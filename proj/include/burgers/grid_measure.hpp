#pragma once

#include <cstddef>
#include <vector>

#include "burgers/front_measure.hpp"
#include "burgers/front_solution.hpp"

namespace burgers {

struct GridSpec2 {
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t nt = 1;
  double x0 = 0.0;
  double x1 = 1.0;
  std::size_t nx = 1;
};

/// Bin masses of the projected kinetic measure, stored t-major. signed_mass
/// bins (p)♯μ; front_abs_mass bins the per-front absolute value of the same
/// contributions (the variation measure, since each front keeps one sign);
/// projected_abs bins (p)♯|μ| directly. Mass outside the window is dropped.
struct GridMeasure {
  GridSpec2 spec;
  std::vector<double> signed_mass;
  std::vector<double> front_abs_mass;
  std::vector<double> projected_abs;

  /// Σ|signed bin mass|. Within-bin cancellation between opposite-signed
  /// fronts makes this a lower bound for the true variation; front_abs_mass
  /// carries the cancellation-free version.
  double total_variation() const;
};

GridMeasure bin_measure(const FrontSolution& sol, const GridSpec2& spec);

struct GridSpec3 {
  GridSpec2 tx;
  double v0 = 0.0;
  double v1 = 1.0;
  std::size_t nv = 1;
};

/// Signed (t,x,v) bins of μ itself, stored t-major then x then v.
struct GridMeasure3 {
  GridSpec3 spec;
  std::vector<double> signed_mass;
};

GridMeasure3 bin_measure3(const FrontSolution& sol, const GridSpec3& spec);

}  // namespace burgers
