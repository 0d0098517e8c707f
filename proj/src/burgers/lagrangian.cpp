#include "burgers/lagrangian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "burgers/bump.hpp"
#include "burgers/common.hpp"
#include "burgers/front_measure.hpp"
#include "burgers/geometry.hpp"

namespace burgers {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

std::uint64_t bits(double d) { return std::bit_cast<std::uint64_t>(d); }

/// Constant pieces of the initial data clipped to [lo, hi].
struct Piece {
  double lo, hi, value;
};

std::vector<Piece> initial_pieces(const FrontSolution& sol, double lo, double hi) {
  const auto& brk = sol.initial_breaks();
  const auto& val = sol.initial_values();
  std::vector<Piece> out;
  auto add = [&](double a, double b, double v) {
    a = std::max(a, lo);
    b = std::min(b, hi);
    if (b > a) out.push_back({a, b, v});
  };
  if (brk.empty()) {
    add(lo, hi, val[0]);
    return out;
  }
  add(lo, brk.front(), val.front());
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) add(brk[i], brk[i + 1], val[i + 1]);
  add(brk.back(), hi, val.back());
  return out;
}

double slice_integral(const FrontSolution& sol, double t, double a, double b) {
  if (!(b > a)) return 0.0;
  const Slice s = sol.slice_at(t);
  double acc = 0.0;
  double cur = a;
  for (std::size_t i = 0; i < s.positions.size(); ++i) {
    const double p = s.positions[i];
    if (p <= cur) continue;
    const double seg_hi = std::min(p, b);
    if (seg_hi > cur) acc += s.values[i] * (seg_hi - cur);
    cur = seg_hi;
    if (cur >= b) return acc;
  }
  if (b > cur) acc += s.values.back() * (b - cur);
  return acc;
}

struct ParticleSeed {
  double x, v, w;
};

LagrangianRep trace_all(const FrontSolution& sol, Side side,
                        const std::vector<ParticleSeed>& seeds, SamplingSpec spec) {
  LagrangianRep rep;
  rep.side = side;
  rep.sampling = spec;
  rep.fingerprint = solution_fingerprint(sol);
  rep.trajectories.resize(seeds.size());
  std::vector<std::size_t> ties(seeds.size(), 0);
  parallel_for(seeds.size(), [&](std::size_t i) {
    rep.trajectories[i] =
        trace_particle(sol, side, seeds[i].x, seeds[i].v, seeds[i].w, &ties[i]);
  });
  for (std::size_t t : ties) rep.tie_count += t;
  return rep;
}

/// v-cell seeds for one column: [v_base, v_base + extent] split into cells no
/// taller than 1/n_v, centers traced with weight = exact cell area.
void seed_column(double x_c, double w, double v_base, double extent, std::size_t n_v,
                 std::vector<ParticleSeed>& out) {
  if (!(extent > 0.0)) return;
  const std::size_t m = static_cast<std::size_t>(
      std::ceil(extent * static_cast<double>(n_v) - 1e-12));
  const double h = extent / static_cast<double>(std::max<std::size_t>(m, 1));
  for (std::size_t k = 0; k < std::max<std::size_t>(m, 1); ++k)
    out.push_back({x_c, v_base + (static_cast<double>(k) + 0.5) * h, w * h});
}

std::vector<ParticleSeed> seed_strip(const FrontSolution& sol, Side side, double lo,
                                     double hi, std::size_t n_x, std::size_t n_v) {
  const double dx = (hi - lo) / static_cast<double>(n_x);
  std::vector<ParticleSeed> seeds;
  for (const Piece& p : initial_pieces(sol, lo, hi)) {
    const double extent = side == Side::hypograph ? p.value : 1.0 - p.value;
    if (!(extent > 0.0)) continue;
    const std::size_t cols = static_cast<std::size_t>(
        std::max(1.0, std::ceil((p.hi - p.lo) / dx - 1e-12)));
    const double w = (p.hi - p.lo) / static_cast<double>(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const double x_c = p.lo + (static_cast<double>(j) + 0.5) * w;
      const double v_base = side == Side::hypograph ? 0.0 : p.value;
      seed_column(x_c, w, v_base, extent, n_v, seeds);
    }
  }
  return seeds;
}

double along_front_clipped(const FrontSolution& sol, const Front& f,
                           const TensorBump2& phi) {
  const double t1 = std::min(f.t_death, sol.horizon());
  if (!(t1 > f.t_birth)) return 0.0;
  return integrate_line_t(phi, f.t_birth, t1, f.x_birth, f.sigma, f.t_birth);
}

}  // namespace

double Trajectory::x_at(double t) const {
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(times.begin(), times.end(), t) - times.begin());
  if (k == 0) return xs.front();
  k = std::min(k - 1, vs.size() - 1);
  return xs[k] + vs[k] * (t - times[k]);
}

double Trajectory::v_at(double t) const {
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(times.begin(), times.end(), t) - times.begin());
  if (k == 0) return vs.front();
  return vs[std::min(k - 1, vs.size() - 1)];
}

double Trajectory::tot_var() const {
  double acc = 0.0;
  for (const JumpRecord& j : jumps) acc += std::fabs(j.v_after - j.v_before);
  return acc;
}

std::vector<VSegment> mu_gamma(const Trajectory& traj) {
  std::vector<VSegment> out;
  out.reserve(traj.jumps.size());
  for (const JumpRecord& j : traj.jumps) {
    const double x = traj.x_at(j.time);
    out.push_back({j.time, x, std::min(j.v_before, j.v_after),
                   std::max(j.v_before, j.v_after), j.upward() ? +1 : -1});
  }
  return out;
}

double LagrangianRep::total_weight() const {
  double acc = 0.0;
  for (const Trajectory& t : trajectories) acc += t.weight;
  return acc;
}

std::uint64_t solution_fingerprint(const FrontSolution& sol) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  h = mix(h, bits(sol.horizon()));
  for (double b : sol.initial_breaks()) h = mix(h, bits(b));
  for (double v : sol.initial_values()) h = mix(h, bits(v));
  for (const Front& f : sol.fronts()) {
    h = mix(h, bits(f.t_birth));
    h = mix(h, bits(f.t_death));
    h = mix(h, bits(f.x_birth));
    h = mix(h, bits(f.u_l));
    h = mix(h, bits(f.u_r));
  }
  return h;
}

Trajectory trace_particle(const FrontSolution& sol, Side side, double x0, double v0,
                          double weight, std::size_t* ties) {
  const double horizon = sol.horizon();
  const auto& fronts = sol.fronts();

  Trajectory traj;
  traj.weight = weight;
  traj.times = {0.0};
  traj.xs = {x0};

  double t = 0.0, x = x0, v = v0;
  std::vector<std::size_t> crossed_now;
  std::vector<std::size_t> tied_logged;
  std::size_t iterations = 0;
  const std::size_t cap = fronts.size() * 8 + 64;

  auto close_segment = [&](double t_new) {
    traj.xs.push_back(x + v * (t_new - t));
    traj.times.push_back(t_new);
    traj.vs.push_back(v);
    x = traj.xs.back();
    t = t_new;
  };

  for (;;) {
    double best_t = horizon;
    std::size_t best_f = JumpRecord::kNoFront;
    for (std::size_t i = 0; i < fronts.size(); ++i) {
      const Front& f = fronts[i];
      if (f.t_death <= t) continue;
      const double t_lo = std::max(t, f.t_birth);
      if (t_lo >= f.t_death || t_lo >= horizon) continue;
      const double gap = (f.x_birth + f.sigma * (t_lo - f.t_birth)) - (x + v * (t_lo - t));
      const double rel = v - f.sigma;
      if (rel == 0.0) {
        if (gap == 0.0 && ties != nullptr &&
            std::find(tied_logged.begin(), tied_logged.end(), i) == tied_logged.end()) {
          ++*ties;
          tied_logged.push_back(i);
        }
        continue;
      }
      double t_hit;
      if (gap == 0.0) {
        t_hit = t_lo;
      } else {
        const double dt = gap / rel;
        if (!(dt > 0.0)) continue;
        t_hit = t_lo + dt;
      }
      if (!(t_hit < f.t_death) || !(t_hit < horizon)) continue;
      if (t_hit == t &&
          std::find(crossed_now.begin(), crossed_now.end(), i) != crossed_now.end())
        continue;
      if (t_hit < best_t || (t_hit == best_t && i < best_f)) {
        best_t = t_hit;
        best_f = i;
      }
    }
    if (best_f == JumpRecord::kNoFront) break;

    if (best_t > t) {
      close_segment(best_t);
      crossed_now.clear();
    }
    crossed_now.push_back(best_f);

    const Front& f = fronts[best_f];
    const double recv = (v > f.sigma) ? f.u_r : f.u_l;
    const bool pass = side == Side::hypograph ? (v <= recv) : (v >= recv);
    if (!pass) {
      const double v_new = f.u_l + f.u_r - v;
      traj.jumps.push_back({t, best_f, v, v_new});
      v = v_new;
    }
    if (++iterations > cap) throw ResourceError("trajectory crossing limit exceeded");
  }

  close_segment(horizon);
  return traj;
}

LagrangianRep build_hypograph_rep(const FrontSolution& sol, std::size_t n_x,
                                  std::size_t n_v) {
  if (n_x < 1 || n_v < 1) throw DomainError("sampling resolution must be at least 1");
  if (!sol.compact_tails())
    throw DomainError("complete hypograph sampling needs compact support");
  const auto& brk = sol.initial_breaks();
  SamplingSpec spec;
  spec.n_x = n_x;
  spec.n_v = n_v;
  spec.x_lo = brk.empty() ? 0.0 : brk.front();
  spec.x_hi = brk.empty() ? 0.0 : brk.back();
  spec.complete = true;
  if (brk.empty()) return trace_all(sol, Side::hypograph, {}, spec);
  const auto seeds = seed_strip(sol, Side::hypograph, spec.x_lo, spec.x_hi, n_x, n_v);
  return trace_all(sol, Side::hypograph, seeds, spec);
}

LagrangianRep build_hypograph_rep_windowed(const FrontSolution& sol, std::size_t n_x,
                                           std::size_t n_v, double x_lo, double x_hi) {
  if (n_x < 1 || n_v < 1) throw DomainError("sampling resolution must be at least 1");
  if (!(x_hi > x_lo)) throw DomainError("empty sampling window");
  for (const Piece& p : initial_pieces(sol, x_hi, x_hi + 1.0 + sol.horizon()))
    if (p.value != 0.0)
      throw DomainError("windowed sampling requires vanishing data right of the window");
  SamplingSpec spec{n_x, n_v, x_lo, x_hi, false};
  const auto seeds = seed_strip(sol, Side::hypograph, x_lo, x_hi, n_x, n_v);
  return trace_all(sol, Side::hypograph, seeds, spec);
}

LagrangianRep build_epigraph_rep(const FrontSolution& sol, std::size_t n_x,
                                 std::size_t n_v) {
  if (n_x < 1 || n_v < 1) throw DomainError("sampling resolution must be at least 1");
  const auto& brk = sol.initial_breaks();
  const double T = sol.horizon();
  const double lo = (brk.empty() ? 0.0 : brk.front()) - T;
  const double hi = (brk.empty() ? 0.0 : brk.back()) + T;
  SamplingSpec spec{n_x, n_v, lo, hi, false};
  const auto seeds = seed_strip(sol, Side::epigraph, lo, hi, n_x, n_v);
  return trace_all(sol, Side::epigraph, seeds, spec);
}

double check_pushforward(const LagrangianRep& rep, const FrontSolution& sol, double t) {
  if (!(t >= 0.0) || !(t <= sol.horizon()))
    throw DomainError("pushforward check time outside [0, horizon]");
  if (rep.sampling.n_x == 0 || !(rep.sampling.x_hi > rep.sampling.x_lo)) return 0.0;

  double w_lo, w_hi;
  if (rep.side == Side::hypograph && rep.sampling.complete) {
    w_lo = rep.sampling.x_lo;
    w_hi = rep.sampling.x_hi + sol.horizon();
  } else if (rep.side == Side::hypograph) {
    w_lo = rep.sampling.x_lo + t;
    w_hi = rep.sampling.x_hi + t;
  } else {
    w_lo = rep.sampling.x_lo + t;
    w_hi = rep.sampling.x_hi;
  }
  if (!(w_hi > w_lo)) return 0.0;

  const double dx =
      (rep.sampling.x_hi - rep.sampling.x_lo) / static_cast<double>(rep.sampling.n_x);
  const std::size_t cols =
      static_cast<std::size_t>(std::max(1.0, std::ceil((w_hi - w_lo) / dx - 1e-12)));

  // Each particle stands for a transported x-cell, so spread its weight over
  // a short segment; point binning would misplace whole level sets at times
  // where the particle lattice lines up with the column edges. A fraction of
  // the cell width keeps the spill across solution jumps small. A particle
  // caught exactly at its reflection instant sits on the front while its
  // cell lies entirely on the outgoing side, so smear it one-sidedly.
  const double smear = dx / 8.0;
  std::vector<double> mass(cols, 0.0);
  for (const Trajectory& traj : rep.trajectories) {
    const double xc = traj.x_at(t);
    double side = 0.0;
    for (const JumpRecord& j : traj.jumps)
      if (j.time == t)
        side = j.v_after - sol.fronts()[j.front_id].sigma > 0.0 ? 1.0 : -1.0;
    const double a = std::max(xc - 0.5 * smear * (1.0 - side), w_lo);
    const double b = std::min(xc + 0.5 * smear * (1.0 + side), w_hi);
    if (!(b > a)) continue;
    std::size_t j = static_cast<std::size_t>((a - w_lo) / dx);
    for (; j < cols; ++j) {
      const double e0 = w_lo + static_cast<double>(j) * dx;
      const double e1 = e0 + dx;
      const double overlap = std::min(b, e1) - std::max(a, e0);
      if (overlap > 0.0) mass[j] += traj.weight * (overlap / smear);
      if (e1 >= b) break;
    }
  }

  double disc = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    const double a = w_lo + static_cast<double>(j) * dx;
    const double b = std::min(w_hi, a + dx);
    double exact = slice_integral(sol, t, a, b);
    if (rep.side == Side::epigraph) exact = (b - a) - exact;
    disc += std::fabs(mass[j] - exact);
  }
  return disc;
}

double totvar_integral(const LagrangianRep& rep) {
  double acc = 0.0;
  for (const Trajectory& traj : rep.trajectories) acc += traj.weight * traj.tot_var();
  return acc;
}

DecomposeReport decompose_mu(const LagrangianRep& rep, const FrontSolution& sol) {
  if (rep.fingerprint != solution_fingerprint(sol))
    throw UsageError("representation was built on a different solution");

  const double T = sol.horizon();
  const Bump bt(T / 8.0, 7.0 * T / 8.0);
  const double r_lo = rep.sampling.x_lo - 1.0;
  const double r_hi = rep.sampling.x_hi + T + 1.0;
  const double span = (r_hi - r_lo) / 6.0;
  std::vector<Bump> bxs, bvs;
  for (int j = 0; j < 5; ++j) bxs.emplace_back(r_lo + j * span, r_lo + (j + 2) * span);
  for (int j = 0; j < 5; ++j) bvs.emplace_back(j / 8.0, j / 8.0 + 3.0 / 8.0);

  // Per-front kernels against each v-bump and line integrals of bt*bx.
  const auto& fronts = sol.fronts();
  DecomposeReport report;
  std::size_t idx = 0;
  for (const Bump& bx : bxs) {
    const TensorBump2 phi{bt, bx};
    for (const Bump& bv : bvs) {
      DecomposePairing row;
      row.psi_index = idx++;
      for (std::size_t i = 0; i < fronts.size(); ++i) {
        const FrontMeasure m = mu_on_front(sol, i);
        const auto ks = bv.knots();
        const double kernel =
            integrate_1d([&](double y) { return m.density(y) * bv.value(y); }, m.u_lo,
                         m.u_hi, std::vector<double>(ks.begin(), ks.end()));
        const double along = along_front_clipped(sol, fronts[i], phi);
        const double contrib = kernel * along;
        row.exact_signed += (rep.side == Side::hypograph ? contrib : -contrib);
        if (m.sign < 0)
          row.exact_minus += -contrib;
        else
          row.exact_plus += contrib;
      }
      for (const Trajectory& traj : rep.trajectories) {
        for (const JumpRecord& j : traj.jumps) {
          const double xj = traj.x_at(j.time);
          const double band = bv.integral_to(std::max(j.v_before, j.v_after)) -
                              bv.integral_to(std::min(j.v_before, j.v_after));
          const double val = traj.weight * band * bt.value(j.time) * bx.value(xj);
          const bool up = j.upward();
          row.rep_signed += up ? val : -val;
          const bool minus_side = rep.side == Side::hypograph ? !up : up;
          if (minus_side)
            row.rep_minus += val;
          else
            row.rep_plus += val;
        }
      }
      report.max_error = std::max(
          {report.max_error, std::fabs(row.rep_signed - row.exact_signed),
           std::fabs(row.rep_minus - row.exact_minus),
           std::fabs(row.rep_plus - row.exact_plus)});
      report.pairings.push_back(row);
    }
  }
  return report;
}

double lebesgue_time_check(const LagrangianRep& rep, const FrontSolution& sol,
                           std::size_t samples, std::uint64_t seed) {
  if (rep.trajectories.empty() || samples == 0) return 0.0;
  Rng rng(seed);
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Trajectory& traj = rep.trajectories[rng.index(rep.trajectories.size())];
    const double t = rng.uniform(0.0, sol.horizon());
    const double x = traj.x_at(t);
    const double v = traj.v_at(t);
    bool on_front = false;
    for (const Front& f : sol.fronts()) {
      if (!f.alive(t)) continue;
      if (std::fabs(f.position(t) - x) <= 1e-12 * (1.0 + std::fabs(x))) {
        on_front = true;
        break;
      }
    }
    if (on_front) continue;
    const double u = sol.evaluate(t, x);
    const bool ok = rep.side == Side::hypograph ? (v < u + 1e-12) : (v > u - 1e-12);
    if (!ok) ++violations;
  }
  return static_cast<double>(violations) / static_cast<double>(samples);
}

}  // namespace burgers
