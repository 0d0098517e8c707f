#include "burgers/transport_collapse.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/common.hpp"

namespace burgers {

namespace {

/// Left trace of open piecewise-constant data.
double open_value_at(const std::vector<double>& breaks, const std::vector<double>& values,
                     double x) {
  const std::size_t i = static_cast<std::size_t>(
      std::lower_bound(breaks.begin(), breaks.end(), x) - breaks.begin());
  return values[i];
}

/// Half-open cell index with a relative guard: a position within 1e-9 cell
/// widths of its right edge counts as crossed. Level sets that cross edges
/// simultaneously in exact arithmetic then stay simultaneous under the
/// roundoff accumulated by repeated position updates (~1e-11 relative),
/// which keeps column compositions contiguous and the restack a no-op.
long column_of(double x, double x_lo, double dx) {
  return static_cast<long>(std::floor((x - x_lo) / dx + 1e-9));
}

}  // namespace

double TCResult::value_at(std::size_t step, double x) const {
  if (step >= values_per_step.size()) throw DomainError("step index out of range");
  const long j = static_cast<long>(std::floor((x - x_lo) / dx + 1e-9));
  if (j < 0 || j >= static_cast<long>(n_cols)) return 0.0;
  return values_per_step[step][static_cast<std::size_t>(j)];
}

TCResult transport_collapse_open(std::vector<double> breaks, std::vector<double> values,
                                 const TCParams& params) {
  if (!(params.tau > 0.0) || !(params.dx > 0.0) || !(params.dv > 0.0))
    throw DomainError("discretization parameters must be positive");
  if (!(params.horizon > 0.0)) throw DomainError("horizon must be positive");
  if (values.size() != breaks.size() + 1)
    throw DomainError("values must have one more entry than breaks");
  if (!std::is_sorted(breaks.begin(), breaks.end()))
    throw DomainError("breaks must be increasing");

  double x_lo = params.x_lo;
  double x_hi = params.x_hi;
  if (std::isnan(x_lo) || std::isnan(x_hi)) {
    if (breaks.empty()) throw DomainError("constant data needs an explicit box");
    x_lo = breaks.front();
    x_hi = breaks.back() + params.horizon + params.dx;
  }
  if (!(x_hi > x_lo)) throw DomainError("empty box");

  TCResult out;
  out.x_lo = x_lo;
  out.dx = params.dx;
  out.n_cols = static_cast<std::size_t>(
      std::max(1.0, std::ceil((x_hi - x_lo) / params.dx - 1e-12)));
  out.cfl_warning = params.tau > params.dx * (1.0 + 1e-12);

  // Cell-center seeding: column j holds levels (k - 0.5) dv below the data.
  const double dv = params.dv;
  const std::size_t n_levels = static_cast<std::size_t>(std::floor(1.0 / dv + 1e-12));
  for (std::size_t j = 0; j < out.n_cols; ++j) {
    const double x_c = x_lo + (static_cast<double>(j) + 0.5) * params.dx;
    const double u = open_value_at(breaks, values, x_c);
    for (std::size_t k = 1; k <= n_levels; ++k) {
      const double v = (static_cast<double>(k) - 0.5) * dv;
      if (!(v < u)) break;
      TCParticle p;
      p.weight = params.dx * dv;
      p.x0 = p.x = x_c;
      p.v0 = p.v = v;
      out.particles.push_back(p);
    }
  }

  auto record_profile = [&]() {
    std::vector<double> row(out.n_cols, 0.0);
    for (const TCParticle& p : out.particles) {
      const long j = column_of(p.x, x_lo, params.dx);
      if (j >= 0 && j < static_cast<long>(out.n_cols)) row[static_cast<std::size_t>(j)] += dv;
    }
    out.values_per_step.push_back(std::move(row));
  };

  out.times.push_back(0.0);
  record_profile();

  const std::size_t n_steps = static_cast<std::size_t>(
      std::ceil(params.horizon / params.tau - 1e-12));
  std::vector<std::vector<std::size_t>> buckets(out.n_cols);
  for (std::size_t s = 0; s < n_steps; ++s) {
    const double t_end = std::min(params.horizon, static_cast<double>(s + 1) * params.tau);
    const double tau_s = t_end - out.times.back();

    parallel_for(out.particles.size(), [&](std::size_t i) {
      out.particles[i].x += out.particles[i].v * tau_s;
    });

    // Compaction: bucket in-box particles by column in index order, then
    // restack each column from v = 0 preserving relative v-order.
    for (auto& b : buckets) b.clear();
    for (std::size_t i = 0; i < out.particles.size(); ++i) {
      const long j = column_of(out.particles[i].x, x_lo, params.dx);
      if (j >= 0 && j < static_cast<long>(out.n_cols)) buckets[static_cast<std::size_t>(j)].push_back(i);
    }
    parallel_for(out.n_cols, [&](std::size_t j) {
      auto& idx = buckets[j];
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return out.particles[a].v < out.particles[b].v;
      });
      bool changed = false;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        TCParticle& part = out.particles[idx[p]];
        const double v_new = (static_cast<double>(p) + 0.5) * dv;
        if (v_new != part.v) {
          part.jumps.push_back({t_end, part.v, v_new});
          part.v = v_new;
          changed = true;
        }
      }
      // A compaction that moved any level rebuilds the column: every cell of
      // the stack occupies the full column, so all members re-enter the
      // lattice at the column midpoint. Columns the compaction left alone
      // keep exact ballistic positions, so free transport stays untouched
      // wherever the occupied set has no overhang.
      if (changed) {
        const double x_c = x_lo + (static_cast<double>(j) + 0.5) * params.dx;
        for (std::size_t i : idx) out.particles[i].x = x_c;
      }
    });

    out.times.push_back(t_end);
    record_profile();
  }

  for (const TCParticle& p : out.particles) out.jump_count += p.jumps.size();
  return out;
}

TCResult transport_collapse(const Profile& initial, const TCParams& params) {
  return transport_collapse_open(initial.breakpoints, initial.values, params);
}

double l1_distance(const TCResult& tc, std::size_t step, const FrontSolution& sol,
                   double lo, double hi) {
  if (step >= tc.times.size()) throw DomainError("step index out of range");
  const double t = tc.times[step];
  if (t > sol.horizon()) throw DomainError("step time beyond solution horizon");
  if (!(hi > lo)) throw DomainError("empty comparison window");

  std::vector<double> cuts{lo, hi};
  for (std::size_t j = 0; j <= tc.n_cols; ++j) {
    const double e = tc.x_lo + static_cast<double>(j) * tc.dx;
    if (e > lo && e < hi) cuts.push_back(e);
  }
  const Slice s = sol.slice_at(t);
  for (double p : s.positions)
    if (p > lo && p < hi) cuts.push_back(p);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    acc += std::fabs(tc.value_at(step, mid) - sol.evaluate(t, mid)) * (cuts[i + 1] - cuts[i]);
  }
  return acc;
}

}  // namespace burgers
