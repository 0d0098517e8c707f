#pragma once

#include <cstdint>
#include <vector>

#include "burgers/front_solution.hpp"

namespace burgers {

enum class Side { hypograph, epigraph };

/// One reflection event on a trajectory.
struct JumpRecord {
  static constexpr std::size_t kNoFront = static_cast<std::size_t>(-1);
  double time = 0.0;
  std::size_t front_id = kNoFront;
  double v_before = 0.0;
  double v_after = 0.0;
  bool upward() const { return v_after > v_before; }
};

/// Weighted characteristic curve: piecewise-linear x-path whose slope on
/// [times[k], times[k+1]) is vs[k]; xs holds positions at the breakpoints.
/// xs[k+1] == xs[k] + vs[k]*(times[k+1]-times[k]) bitwise by construction.
struct Trajectory {
  double weight = 0.0;
  std::vector<double> times;
  std::vector<double> xs;
  std::vector<double> vs;
  std::vector<JumpRecord> jumps;

  double x_at(double t) const;
  double v_at(double t) const;  // right-continuous
  double tot_var() const;
};

/// Signed vertical segment {(t,x)} x [v_lo, v_hi]; sign -1 for downward jumps.
struct VSegment {
  double t = 0.0;
  double x = 0.0;
  double v_lo = 0.0;
  double v_hi = 0.0;
  int sign = 0;
};

/// Per-curve jump measure; no diffuse part for piecewise-constant v-paths.
std::vector<VSegment> mu_gamma(const Trajectory& traj);

struct SamplingSpec {
  std::size_t n_x = 0;
  std::size_t n_v = 0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  bool complete = true;  // whole support sampled vs windowed strip
};

struct LagrangianRep {
  Side side = Side::hypograph;
  SamplingSpec sampling;
  std::vector<Trajectory> trajectories;
  std::size_t tie_count = 0;       // particles riding a front at exactly its slope
  std::uint64_t fingerprint = 0;   // of the solution the rep was built on
  double total_weight() const;
};

/// Stable identity of a solution's initial data and front list.
std::uint64_t solution_fingerprint(const FrontSolution& sol);

/// Trace one level-v0 particle from (0, x0). Straight at slope v between
/// fronts; at a front, passes when the level fits the receiving side
/// (below it on the hypograph side, above it on the epigraph side),
/// otherwise reflects v -> u_l + u_r - v.
Trajectory trace_particle(const FrontSolution& sol, Side side, double x0, double v0,
                          double weight = 0.0, std::size_t* ties = nullptr);

/// Cover the initial hypograph with cells aligned to the profile pieces
/// (about n_x columns, v-cells no taller than 1/n_v) and trace every cell
/// center. Requires compact support.
LagrangianRep build_hypograph_rep(const FrontSolution& sol, std::size_t n_x,
                                  std::size_t n_v);

/// Same sampling restricted to the strip [x_lo, x_hi]; requires the initial
/// data to vanish at and right of x_hi so the strip's domain of influence
/// [x_lo + t, x_hi + t] is fully represented.
LagrangianRep build_hypograph_rep_windowed(const FrontSolution& sol, std::size_t n_x,
                                           std::size_t n_v, double x_lo, double x_hi);

/// Epigraph rep inside the bounding box [first break - T, last break + T]
/// (or [-T, T] for constant data), v in [0,1]; valid window [x_lo + t, x_hi].
LagrangianRep build_epigraph_rep(const FrontSolution& sol, std::size_t n_x,
                                 std::size_t n_v);

/// Bin particle positions at time t into sampling-width columns over the
/// rep's valid window and compare with the exact column integrals of u
/// (resp. 1-u); returns the summed L1 discrepancy.
double check_pushforward(const LagrangianRep& rep, const FrontSolution& sol, double t);

/// Sum of weight * total velocity variation over all trajectories.
double totvar_integral(const LagrangianRep& rep);

struct DecomposePairing {
  std::size_t psi_index = 0;
  double rep_signed = 0.0;
  double exact_signed = 0.0;
  double rep_minus = 0.0;
  double exact_minus = 0.0;
  double rep_plus = 0.0;
  double exact_plus = 0.0;
};

struct DecomposeReport {
  std::vector<DecomposePairing> pairings;
  double max_error = 0.0;
};

/// Pair the assembled per-curve measure sum against a fixed tensor-bump
/// family and compare with the exact front measure: signed totals (epigraph
/// reps carry the opposite sign), the negative part against downward
/// (hypograph) resp. upward (epigraph) jumps, and the positive part
/// against the mirror set.
DecomposeReport decompose_mu(const LagrangianRep& rep, const FrontSolution& sol);

/// Sample (trajectory, time) pairs; count samples lying off every front where
/// the particle level fails the strict side condition against u(t, x).
double lebesgue_time_check(const LagrangianRep& rep, const FrontSolution& sol,
                           std::size_t samples, std::uint64_t seed);

}  // namespace burgers
