#include "burgers/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/acceptance.hpp"
#include "burgers/concentration.hpp"
#include "burgers/entropy.hpp"
#include "burgers/envelope.hpp"
#include "burgers/front_measure.hpp"
#include "burgers/kinetic.hpp"
#include "burgers/reversal.hpp"
#include "burgers/transport_collapse.hpp"

namespace burgers {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

/// Shortest-width fixed formatting that round-trips doubles.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw UsageError("cannot write " + p.string());
}

void write_json(const fs::path& p, const ordered_json& j) {
  write_file(p, j.dump(2) + "\n");
}

std::vector<double> sample_times(double horizon, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i)
    ts[i] = horizon * static_cast<double>(i) / static_cast<double>(n - 1);
  return ts;
}

ordered_json policy_json(const Policy& p) {
  ordered_json j;
  if (p.increasing == Policy::Increasing::keep) {
    j["increasing"] = "keep";
  } else {
    j["increasing"] = "rarefy";
    j["delta"] = p.delta;
  }
  return j;
}

/// Anchor grid with unset bounds derived from the solution the family is
/// built on: t over [0, 0.9T], x over [first break - 1, last break + T].
AnchorGrid grid_from_spec(const AnchorSpec& a, const FrontSolution& sol) {
  const double T = sol.horizon();
  double first = 0.0, last = 0.0;
  if (!sol.initial_breaks().empty()) {
    first = sol.initial_breaks().front();
    last = sol.initial_breaks().back();
  }
  const double t_lo = a.t_lo.value_or(0.0);
  const double t_hi = a.t_hi.value_or(0.9 * T);
  const double x_lo = a.x_lo.value_or(first - 1.0);
  const double x_hi = a.x_hi.value_or(last + T);
  return AnchorGrid::uniform(a.n_t, t_lo, t_hi, a.n_x, x_lo, x_hi, a.samples);
}

/// Explicit anchor bounds carried to the reversed frame: t -> T - t,
/// x -> -x. Unset bounds stay unset and are re-derived there.
AnchorSpec reflect_anchors(const AnchorSpec& a, double horizon) {
  AnchorSpec r = a;
  r.t_lo = a.t_hi ? std::optional<double>(horizon - *a.t_hi) : std::nullopt;
  r.t_hi = a.t_lo ? std::optional<double>(horizon - *a.t_lo) : std::nullopt;
  r.x_lo = a.x_hi ? std::optional<double>(-*a.x_hi) : std::nullopt;
  r.x_hi = a.x_lo ? std::optional<double>(-*a.x_lo) : std::nullopt;
  return r;
}

/// Hypograph rep of the reversed solution, for the expanding-side family.
/// Works when the reversed data is compact or at least vanishes rightward.
LagrangianRep reversed_hypograph_rep(const Scenario& sc, const FrontSolution& rev) {
  const RepresentationSpec& r = sc.representation;
  if (rev.compact_tails()) return build_hypograph_rep(rev, r.n_x, r.n_v);
  const std::vector<double>& vals = rev.initial_values();
  if (!vals.empty() && vals.back() == 0.0 && !rev.initial_breaks().empty()) {
    const double first = rev.initial_breaks().front();
    const double last = rev.initial_breaks().back();
    return build_hypograph_rep_windowed(rev, r.n_x, r.n_v, first - rev.horizon() - 1.0,
                                        last);
  }
  throw UsageError(
      "expanding-side family needs the reversed data to vanish on the right; "
      "use data whose left tail is zero");
}

ordered_json rep_json(const LagrangianRep& rep, const FrontSolution& sol, double tol) {
  ordered_json j;
  j["side"] = rep.side == Side::hypograph ? "hypograph" : "epigraph";
  j["complete"] = rep.sampling.complete;
  j["n_x"] = rep.sampling.n_x;
  j["n_v"] = rep.sampling.n_v;
  j["x_lo"] = rep.sampling.x_lo;
  j["x_hi"] = rep.sampling.x_hi;
  j["particles"] = rep.trajectories.size();
  j["total_weight"] = rep.total_weight();
  j["tie_count"] = rep.tie_count;

  ordered_json push = ordered_json::array();
  double max_push = 0.0;
  for (double t : sample_times(sol.horizon(), 11)) {
    const double d = check_pushforward(rep, sol, t);
    push.push_back(ordered_json{{"t", t}, {"discrepancy", d}});
    max_push = std::max(max_push, d);
  }
  j["pushforward"] = push;
  j["pushforward_max"] = max_push;
  j["pushforward_tol"] = tol;
  j["pushforward_pass"] = max_push <= tol;

  double ode_err = 0.0;
  for (const Trajectory& tr : rep.trajectories)
    for (std::size_t k = 0; k + 1 < tr.times.size() && k < tr.vs.size(); ++k)
      ode_err = std::max(ode_err, std::abs(tr.xs[k + 1] -
                                           (tr.xs[k] + tr.vs[k] * (tr.times[k + 1] -
                                                                   tr.times[k]))));
  j["ode_max_error"] = ode_err;
  j["ode_exact"] = ode_err == 0.0;

  const double tv = totvar_integral(rep);
  const double nu = nu_total(sol);
  j["totvar_integral"] = tv;
  j["nu_total"] = nu;
  if (rep.sampling.complete) {
    j["totvar_error"] = std::abs(tv - nu);
    j["totvar_pass"] = std::abs(tv - nu) <= tol;
  } else {
    j["totvar_error"] = nullptr;
    j["totvar_pass"] = nullptr;
  }

  const DecomposeReport dec = decompose_mu(rep, sol);
  j["decompose_pairings"] = dec.pairings.size();
  j["decompose_max_error"] = dec.max_error;
  return j;
}

void append_curves(std::string& csv, const CurveFamily& fam, std::size_t& curve_id) {
  for (const EnvelopeCurve& c : fam.curves) {
    for (std::size_t k = 0; k < c.times.size(); ++k) {
      csv += std::to_string(curve_id);
      csv += ',';
      csv += fmt(c.times[k]);
      csv += ',';
      csv += fmt(c.values[k]);
      csv += '\n';
    }
    ++curve_id;
  }
}

ordered_json family_json(const CurveFamily& fam, std::size_t id_lo) {
  ordered_json j;
  j["raw_count"] = fam.raw_count;
  j["kept_count"] = fam.curves.size();
  j["dedup_tol"] = fam.dedup_tol;
  j["curve_ids"] = ordered_json{{"lo", id_lo}, {"hi", id_lo + fam.curves.size()}};
  return j;
}

}  // namespace

LagrangianRep scenario_hypograph_rep(const Scenario& sc, const FrontSolution& sol) {
  const RepresentationSpec& r = sc.representation;
  if (r.window_lo && r.window_hi)
    return build_hypograph_rep_windowed(sol, r.n_x, r.n_v, *r.window_lo, *r.window_hi);
  if (sol.compact_tails()) return build_hypograph_rep(sol, r.n_x, r.n_v);
  throw UsageError(
      "scenario: data without compact support needs representation.window");
}

void run_solve(const Scenario& sc, const std::string& out_dir) {
  const fs::path out(out_dir);
  fs::create_directories(out);
  const FrontSolution sol = sc.solve();

  std::string csv = "t_birth,t_death,x_birth,u_l,u_r,sigma,class\n";
  for (const Front& f : sol.fronts()) {
    csv += fmt(f.t_birth);
    csv += ',';
    csv += fmt(f.t_death);
    csv += ',';
    csv += fmt(f.x_birth);
    csv += ',';
    csv += fmt(f.u_l);
    csv += ',';
    csv += fmt(f.u_r);
    csv += ',';
    csv += fmt(f.sigma);
    csv += ',';
    csv += to_string(f.cls);
    csv += '\n';
  }
  write_file(out / "fronts.csv", csv);

  ordered_json j;
  j["horizon"] = sol.horizon();
  j["policy"] = policy_json(sol.policy());
  j["front_count"] = sol.fronts().size();
  j["event_count"] = sol.events().size();
  j["compact_support"] = sol.compact_tails();
  j["initial"] =
      ordered_json{{"breakpoints", sol.initial_breaks()}, {"values", sol.initial_values()}};
  ordered_json evs = ordered_json::array();
  for (const InteractionEvent& e : sol.events())
    evs.push_back(ordered_json{
        {"time", e.time}, {"x", e.x}, {"incoming", e.incoming}, {"outgoing", e.outgoing}});
  j["events"] = evs;
  if (sol.compact_tails()) {
    const std::vector<double> ts = sample_times(sol.horizon(), 11);
    std::vector<double> ms;
    double drift = 0.0;
    for (double t : ts) {
      ms.push_back(sol.mass(t));
      drift = std::max(drift, std::abs(ms.back() - ms.front()));
    }
    j["mass"] = ordered_json{{"times", ts}, {"values", ms}, {"max_drift", drift}};
  } else {
    j["mass"] = nullptr;
  }
  write_json(out / "solution.json", j);
}

void run_measures(const Scenario& sc, const std::string& out_dir) {
  const fs::path out(out_dir);
  fs::create_directories(out);
  const FrontSolution sol = sc.solve();

  std::vector<EntropyDescriptor> lib;
  lib.push_back(EntropyDescriptor::quadratic());
  Rng rng(sc.seed);
  for (std::size_t i = 0; i < sc.entropies; ++i)
    lib.push_back(random_convex_entropy(rng, i));

  std::string csv = "front_id,t0,t1,entropy_id,rate_closed_form,rate_kernel,nu_rate\n";
  double max_mismatch = 0.0;
  for (const EntropyDescriptor& eta : lib) {
    for (const DissipationRow& r : entropy_dissipation(sol, eta)) {
      csv += std::to_string(r.front_id);
      csv += ',';
      csv += fmt(r.t0);
      csv += ',';
      csv += fmt(r.t1);
      csv += ',';
      csv += r.entropy_id;
      csv += ',';
      csv += fmt(r.rate_closed_form);
      csv += ',';
      csv += fmt(r.rate_kernel);
      csv += ',';
      csv += fmt(r.nu_rate);
      csv += '\n';
      max_mismatch = std::max(max_mismatch, std::abs(r.rate_closed_form - r.rate_kernel));
    }
  }
  write_file(out / "measures.csv", csv);

  const OneEntropyReport rep = one_entropy_check(sol);
  double mu_signed = 0.0, mu_abs = 0.0;
  for (const FrontMeasure& m : kinetic_measure(sol)) {
    mu_signed += m.total_mass();
    mu_abs += m.total_abs_mass();
  }

  ordered_json j;
  j["classification"] = rep.entropy_solution ? "entropy solution" : "not entropy solution";
  j["entropy_solution"] = rep.entropy_solution;
  j["has_anti_front"] = rep.has_anti_front;
  j["consistent"] = rep.consistent;
  j["projection_identity"] = rep.projection_identity;
  j["quadratic_dissipation_nonpositive"] = rep.quadratic_dissipation_nonpositive;
  j["grid_discrepancy"] = rep.grid_discrepancy;
  j["max_restriction_error"] = rep.max_restriction_error;
  j["mu_total"] = mu_signed;
  j["mu_abs_total"] = mu_abs;
  j["nu_total"] = nu_total(sol);
  j["entropy_count"] = lib.size();
  j["max_rate_mismatch"] = max_mismatch;
  ordered_json rows = ordered_json::array();
  for (const OneEntropyRow& r : rep.rows)
    rows.push_back(ordered_json{{"front_id", r.front_id},
                                {"single_signed", r.single_signed},
                                {"signed_mass", r.signed_mass},
                                {"abs_mass", r.abs_mass}});
  j["fronts"] = rows;
  write_json(out / "measures.json", j);
}

void run_represent(const Scenario& sc, const std::string& out_dir) {
  const fs::path out(out_dir);
  fs::create_directories(out);
  const FrontSolution sol = sc.solve();
  const LagrangianRep rep_h = scenario_hypograph_rep(sc, sol);
  const LagrangianRep rep_e =
      build_epigraph_rep(sol, sc.representation.n_x, sc.representation.n_v);

  std::string csv = "particle_id,weight,breakpoint_t,x,v\n";
  csv.reserve(64 * rep_h.trajectories.size());
  for (std::size_t id = 0; id < rep_h.trajectories.size(); ++id) {
    const Trajectory& tr = rep_h.trajectories[id];
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      const double v = tr.vs.empty() ? 0.0 : tr.vs[std::min(k, tr.vs.size() - 1)];
      csv += std::to_string(id);
      csv += ',';
      csv += fmt(tr.weight);
      csv += ',';
      csv += fmt(tr.times[k]);
      csv += ',';
      csv += fmt(tr.xs[k]);
      csv += ',';
      csv += fmt(v);
      csv += '\n';
    }
  }
  write_file(out / "particles.csv", csv);

  const double tol = sc.pushforward_tol();
  ordered_json j;
  j["hypograph"] = rep_json(rep_h, sol, tol);
  j["epigraph"] = rep_json(rep_e, sol, tol);
  if (sc.transport_collapse) {
    const TransportCollapseSpec& t = *sc.transport_collapse;
    TCParams params;
    params.tau = t.tau;
    params.dx = t.dx;
    params.dv = t.dv;
    params.horizon = sc.horizon;
    if (t.box_lo) params.x_lo = *t.box_lo;
    if (t.box_hi) params.x_hi = *t.box_hi;
    const TCResult tc = transport_collapse_open(sc.breakpoints, sc.values, params);
    const std::size_t last = tc.times.empty() ? 0 : tc.times.size() - 1;
    const double lo = tc.x_lo;
    const double hi = tc.x_lo + tc.dx * static_cast<double>(tc.n_cols);
    ordered_json tj;
    tj["tau"] = t.tau;
    tj["dx"] = t.dx;
    tj["dv"] = t.dv;
    tj["steps"] = tc.times.size();
    tj["l1_final"] = l1_distance(tc, last, sol, lo, hi);
    tj["jump_count"] = tc.jump_count;
    tj["cfl_warning"] = tc.cfl_warning;
    j["transport_collapse"] = tj;
  }
  write_json(out / "representation.json", j);
}

void run_concentrate(const Scenario& sc, const std::string& out_dir) {
  const fs::path out(out_dir);
  fs::create_directories(out);
  const FrontSolution sol = sc.solve();
  const LagrangianRep rep_h = scenario_hypograph_rep(sc, sol);

  const AnchorGrid grid = grid_from_spec(sc.anchors, sol);
  const CurveFamily fam_minus = build_J_minus(rep_h, sol, grid);
  const ConcentrationReport minus = concentration_report(sol, fam_minus, sc.epsilons);

  // The expanding side: run the contracting-side machinery on the reversed
  // solution, whose surviving fronts are exactly this solution's
  // anti-entropic ones. Without any, the fractions are vacuously 1.
  const ReversalReport rev = time_reversal(sol);
  bool any_anti = false;
  for (const Front& f : sol.fronts()) any_anti = any_anti || f.cls == FrontClass::anti_entropic;
  CurveFamily fam_plus;
  ConcentrationReport plus;
  if (any_anti) {
    const LagrangianRep rep_plus = reversed_hypograph_rep(sc, rev.reversed);
    const AnchorGrid grid_plus =
        grid_from_spec(reflect_anchors(sc.anchors, sol.horizon()), rev.reversed);
    fam_plus = build_J_minus(rep_plus, rev.reversed, grid_plus);
    plus = concentration_report(rev.reversed, fam_plus, sc.epsilons);
  } else {
    plus = concentration_report(rev.reversed, fam_plus, sc.epsilons);
  }

  std::string curves = "curve_id,t,f\n";
  std::size_t curve_id = 0;
  append_curves(curves, fam_minus, curve_id);
  const std::size_t plus_lo = curve_id;
  append_curves(curves, fam_plus, curve_id);
  write_file(out / "curves.csv", curves);

  const std::size_t grid_n = grid.anchor_ts.size() * grid.anchor_xs.size();
  std::string csv = "epsilon,grid_n,fraction_minus,fraction_plus\n";
  for (std::size_t i = 0; i < sc.epsilons.size(); ++i) {
    csv += fmt(sc.epsilons[i]);
    csv += ',';
    csv += std::to_string(grid_n);
    csv += ',';
    csv += fmt(minus.rows[i].fraction);
    csv += ',';
    csv += fmt(plus.rows[i].fraction);
    csv += '\n';
  }
  write_file(out / "concentration.csv", csv);

  ordered_json j;
  j["grid"] = ordered_json{{"n_t", grid.anchor_ts.size()},
                           {"n_x", grid.anchor_xs.size()},
                           {"samples_per_curve", grid.samples_per_curve}};
  j["minus"] = family_json(fam_minus, 0);
  j["plus"] = family_json(fam_plus, plus_lo);
  j["plus"]["frame"] = "reversed: t -> T - t, x -> -x";
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < sc.epsilons.size(); ++i) {
    const TubeFraction& m = minus.rows[i];
    const TubeFraction& p = plus.rows[i];
    rows.push_back(ordered_json{{"epsilon", m.epsilon},
                                {"fraction_minus", m.fraction},
                                {"captured_minus", m.captured},
                                {"total_minus", m.total},
                                {"vacuous_minus", m.vacuous},
                                {"fraction_plus", p.fraction},
                                {"captured_plus", p.captured},
                                {"total_plus", p.total},
                                {"vacuous_plus", p.vacuous}});
  }
  j["rows"] = rows;
  write_json(out / "concentration.json", j);
}

bool run_verify_all(const std::string& out_dir) {
  const fs::path out(out_dir);
  fs::create_directories(out);
  const std::vector<CriterionResult> results = run_acceptance();
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    std::printf("%s %2d %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    arr.push_back(
        ordered_json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  std::fflush(stdout);
  ordered_json j;
  j["pass"] = all;
  j["criteria"] = arr;
  write_json(out / "verdict.json", j);
  return all;
}

}  // namespace burgers
