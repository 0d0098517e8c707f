#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgers/evolve.hpp"

namespace burgers {

struct RepresentationSpec {
  std::size_t n_x = 200;
  std::size_t n_v = 200;
  /// Hypograph sampling strip for data without compact support.
  std::optional<double> window_lo;
  std::optional<double> window_hi;
};

struct TransportCollapseSpec {
  double tau = 0.01;
  double dx = 0.01;
  double dv = 0.01;
  std::optional<double> box_lo;
  std::optional<double> box_hi;
};

/// Anchor grid for the envelope family; unset bounds are derived from the
/// solution (t over [0, 0.9T], x over [first break - 1, last break + T]).
struct AnchorSpec {
  std::size_t n_t = 20;
  std::size_t n_x = 20;
  std::optional<double> t_lo;
  std::optional<double> t_hi;
  std::optional<double> x_lo;
  std::optional<double> x_hi;
  std::size_t samples = 65;
};

struct ToleranceSpec {
  /// 0 selects the default 2/min(n_x, n_v) of the representation.
  double pushforward = 0.0;
  double quadrature = 1e-6;
  double exact = 1e-12;
};

/// One self-contained run configuration; a fixed scenario and seed produce
/// byte-identical reports.
struct Scenario {
  std::vector<double> breakpoints;
  std::vector<double> values;
  double horizon = 1.0;
  Policy policy = Policy::keep();
  std::uint64_t seed = 2026;
  RepresentationSpec representation;
  std::optional<TransportCollapseSpec> transport_collapse;
  AnchorSpec anchors;
  std::vector<double> epsilons = {0.05, 0.01};
  /// Number of seeded convex entropies emitted beside the quadratic one.
  std::size_t entropies = 3;
  EvolveLimits limits;
  ToleranceSpec tolerances;

  double pushforward_tol() const;
  FrontSolution solve() const;
};

/// Parses the JSON text of a scenario; throws UsageError on malformed input.
Scenario parse_scenario(const std::string& text);

/// Reads and parses a scenario file; throws UsageError when unreadable.
Scenario load_scenario(const std::string& path);

}  // namespace burgers
