#pragma once

#include <cstddef>
#include <vector>

#include "burgers/front_solution.hpp"

namespace burgers {

/// Kinetic v-density attached to one front, per unit time:
/// a(v) = sign·(u_hi - v)(v - u_lo)/2 on (u_lo, u_hi), zero outside, with
/// sign = -1 on entropic fronts and +1 on anti-entropic ones. The density
/// never changes sign, vanishes at both endpoints, and integrates to
/// sign·(u_hi - u_lo)³/12.
struct FrontMeasure {
  std::size_t front_id = 0;
  double u_lo = 0.0;
  double u_hi = 0.0;
  double sign = -1.0;
  double t0 = 0.0;  // alive window
  double t1 = 0.0;

  double density(double v) const {
    if (v <= u_lo || v >= u_hi) return 0.0;
    return sign * 0.5 * (u_hi - v) * (v - u_lo);
  }
  double abs_density(double v) const { return sign * density(v); }

  /// ∫ a dv per unit time.
  double integral() const {
    const double d = u_hi - u_lo;
    return sign * d * d * d / 12.0;
  }
  double abs_integral() const { return sign * integral(); }

  /// ∫_{u_lo}^{min(v,u_hi)} a, the exact cumulative density.
  double integral_to(double v) const;

  double duration() const { return t1 - t0; }
  double total_mass() const { return integral() * duration(); }
  double total_abs_mass() const { return abs_integral() * duration(); }
};

/// The measure carried by one front of a solution.
FrontMeasure mu_on_front(const FrontSolution& sol, std::size_t front_id);

/// Density for a free-standing jump observed over a unit time window.
/// Throws on equal states (degenerate front).
FrontMeasure front_measure_from_states(double u_l, double u_r);

/// Per-front measures covering the whole solution; μ vanishes off fronts.
std::vector<FrontMeasure> kinetic_measure(const FrontSolution& sol);

/// Line density of ν = (p_{t,x})♯|μ| on a front, per unit time.
double nu_rate(const Front& f);

struct NuRow {
  std::size_t front_id = 0;
  double rate = 0.0;   // per unit time
  double total = 0.0;  // rate · lifetime
};

/// ν decomposed per front; zero elsewhere.
std::vector<NuRow> nu_measure(const FrontSolution& sol);

double nu_total(const FrontSolution& sol);

}  // namespace burgers
