#include "burgers/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "burgers/common.hpp"

namespace burgers {

double EnvelopeCurve::value_at(double t) const {
  if (times.empty()) return anchor_x;
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times.begin()) - 1;
  const double w = (t - times[k]) / (times[k + 1] - times[k]);
  return values[k] + w * (values[k + 1] - values[k]);
}

AnchorGrid AnchorGrid::uniform(std::size_t n_t, double t_lo, double t_hi, std::size_t n_x,
                               double x_lo, double x_hi, std::size_t samples_per_curve) {
  if (n_t == 0 || n_x == 0) throw DomainError("anchor grid needs at least one point per axis");
  AnchorGrid g;
  g.samples_per_curve = samples_per_curve;
  for (std::size_t i = 0; i < n_t; ++i)
    g.anchor_ts.push_back(n_t == 1 ? t_lo
                                   : t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                                static_cast<double>(n_t - 1));
  for (std::size_t j = 0; j < n_x; ++j)
    g.anchor_xs.push_back(n_x == 1 ? x_lo
                                   : x_lo + (x_hi - x_lo) * static_cast<double>(j) /
                                                static_cast<double>(n_x - 1));
  return g;
}

namespace {

void require_built_on(const LagrangianRep& rep, const FrontSolution& sol) {
  if (rep.fingerprint != solution_fingerprint(sol))
    throw UsageError("representation was built on a different solution");
}

}  // namespace

EnvelopeCurve envelope_curve(const LagrangianRep& rep_h, const FrontSolution& sol,
                             double anchor_t, double anchor_x, std::size_t n_samples) {
  if (rep_h.side != Side::hypograph)
    throw UsageError("envelope curves need a hypograph representation");
  require_built_on(rep_h, sol);
  if (!(anchor_t >= 0.0) || anchor_t >= sol.horizon())
    throw DomainError("anchor time outside [0, horizon)");
  if (n_samples < 2) n_samples = 2;

  EnvelopeCurve c;
  c.anchor_t = anchor_t;
  c.anchor_x = anchor_x;
  const double t_hi = sol.horizon();
  c.times.resize(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k)
    c.times[k] = anchor_t + (t_hi - anchor_t) * static_cast<double>(k) /
                                static_cast<double>(n_samples - 1);

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < rep_h.trajectories.size(); ++i) {
    const Trajectory& traj = rep_h.trajectories[i];
    if (traj.weight > 0.0 && traj.x_at(anchor_t) < anchor_x) selected.push_back(i);
  }
  c.selected = selected.size();

  c.values.assign(n_samples, anchor_x);
  c.argmax.assign(n_samples, EnvelopeCurve::kNone);
  if (!selected.empty()) {
    parallel_for(n_samples, [&](std::size_t k) {
      double best = -std::numeric_limits<double>::infinity();
      std::size_t who = EnvelopeCurve::kNone;
      for (std::size_t i : selected) {
        const double x = rep_h.trajectories[i].x_at(c.times[k]);
        if (x > best) {
          best = x;
          who = i;
        }
      }
      c.values[k] = best;
      c.argmax[k] = who;
    });
  }
  return c;
}

SeparationReport separation_check(const LagrangianRep& rep_h, const LagrangianRep& rep_e,
                                  const FrontSolution& sol, const EnvelopeCurve& f,
                                  double anchor_t, double anchor_x) {
  if (f.anchor_t != anchor_t || f.anchor_x != anchor_x)
    throw UsageError("envelope anchor mismatch");
  if (rep_h.side != Side::hypograph || rep_e.side != Side::epigraph)
    throw UsageError("separation check needs one hypograph and one epigraph representation");
  require_built_on(rep_h, sol);
  require_built_on(rep_e, sol);

  SeparationReport out;
  for (std::size_t k = 0; k < f.times.size(); ++k) {
    const double t = f.times[k];
    const double bound = f.values[k];
    double hypo = 0.0;
    for (const Trajectory& traj : rep_h.trajectories)
      if (traj.weight > 0.0 && traj.x_at(anchor_t) < anchor_x && traj.x_at(t) > bound)
        hypo += traj.weight;
    double epi = 0.0;
    for (const Trajectory& traj : rep_e.trajectories)
      if (traj.weight > 0.0 && traj.x_at(anchor_t) >= anchor_x && traj.x_at(t) < bound)
        epi += traj.weight;
    out.hypo_violation_mass = std::max(out.hypo_violation_mass, hypo);
    out.epi_violation_mass = std::max(out.epi_violation_mass, epi);
  }
  return out;
}

CurveFamily build_J_minus(const LagrangianRep& rep_h, const FrontSolution& sol,
                          const AnchorGrid& grid, double dedup_tol) {
  CurveFamily fam;
  fam.dedup_tol = dedup_tol > 0.0
                      ? dedup_tol
                      : (rep_h.sampling.n_x > 0
                             ? 2.0 * (rep_h.sampling.x_hi - rep_h.sampling.x_lo) /
                                   static_cast<double>(rep_h.sampling.n_x)
                             : 1e-12);

  auto duplicate = [&](const EnvelopeCurve& a, const EnvelopeCurve& b) {
    const double lo = std::max(a.times.front(), b.times.front());
    auto sup_on = [&](const EnvelopeCurve& grid_curve) {
      double sup = 0.0;
      for (double t : grid_curve.times)
        if (t >= lo) sup = std::max(sup, std::fabs(a.value_at(t) - b.value_at(t)));
      return sup;
    };
    return std::max(sup_on(a), sup_on(b)) <= fam.dedup_tol;
  };

  for (double at : grid.anchor_ts) {
    if (!(at >= 0.0) || at >= sol.horizon()) continue;
    for (double ax : grid.anchor_xs) {
      EnvelopeCurve c = envelope_curve(rep_h, sol, at, ax, grid.samples_per_curve);
      ++fam.raw_count;
      bool dup = false;
      for (const EnvelopeCurve& kept : fam.curves)
        if (duplicate(kept, c)) {
          dup = true;
          break;
        }
      if (!dup) fam.curves.push_back(std::move(c));
    }
  }
  return fam;
}

NoCrossingReport no_crossing_sample(const LagrangianRep& rep_h, const LagrangianRep& rep_e,
                                    std::size_t samples, std::uint64_t seed) {
  if (rep_h.side != Side::hypograph || rep_e.side != Side::epigraph)
    throw UsageError("crossing check needs one hypograph and one epigraph representation");
  if (rep_h.fingerprint != rep_e.fingerprint)
    throw UsageError("representations come from different solutions");

  NoCrossingReport out;
  auto cell = [](const LagrangianRep& r) {
    return r.sampling.n_x > 0
               ? (r.sampling.x_hi - r.sampling.x_lo) / static_cast<double>(r.sampling.n_x)
               : 0.0;
  };
  out.tolerance = std::max(cell(rep_h), cell(rep_e));
  if (rep_h.trajectories.empty() || rep_e.trajectories.empty()) return out;

  const double horizon = rep_h.trajectories.front().times.back();
  constexpr std::size_t kLaterTimes = 16;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Trajectory& g = rep_h.trajectories[rng.index(rep_h.trajectories.size())];
    const Trajectory& e = rep_e.trajectories[rng.index(rep_e.trajectories.size())];
    const double tb = rng.uniform(0.0, horizon);
    if (!(g.x_at(tb) < e.x_at(tb))) continue;
    ++out.checked;
    for (std::size_t k = 1; k <= kLaterTimes; ++k) {
      const double t =
          tb + (horizon - tb) * static_cast<double>(k) / static_cast<double>(kLaterTimes);
      const double gap = g.x_at(t) - e.x_at(t);
      if (gap > out.tolerance)
        ++out.strict_violations;
      else if (gap > 0.0)
        ++out.near_ties;
    }
  }
  return out;
}

}  // namespace burgers
