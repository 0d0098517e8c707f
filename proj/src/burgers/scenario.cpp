#include "burgers/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace burgers {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw UsageError("scenario: " + what); }

double positive_number(const json& j, const char* key) {
  if (!j.is_number()) fail(std::string(key) + " must be a number");
  const double v = j.get<double>();
  if (!(v > 0.0)) fail(std::string(key) + " must be positive");
  return v;
}

std::size_t positive_count(const json& j, const char* key) {
  if (!j.is_number_unsigned()) fail(std::string(key) + " must be a nonnegative integer");
  const std::size_t v = j.get<std::size_t>();
  if (v == 0) fail(std::string(key) + " must be positive");
  return v;
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.is_array()) fail(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const json& e : j) {
    if (!e.is_number()) fail(std::string(key) + " must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const char* where) {
  for (const auto& item : j.items()) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return item.key() == k; }))
      fail(std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

}  // namespace

double Scenario::pushforward_tol() const {
  if (tolerances.pushforward > 0.0) return tolerances.pushforward;
  return 2.0 / static_cast<double>(std::min(representation.n_x, representation.n_v));
}

FrontSolution Scenario::solve() const {
  return evolve_open(breakpoints, values, horizon, policy, limits);
}

Scenario parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!root.is_object()) fail("top level must be an object");
  reject_unknown(root,
                 {"breakpoints", "values", "horizon", "policy", "seed", "representation",
                  "transport_collapse", "anchors", "epsilons", "entropies", "limits",
                  "tolerances"},
                 "scenario");

  Scenario s;
  if (!root.contains("values")) fail("missing \"values\"");
  s.values = number_array(root["values"], "values");
  if (s.values.empty()) fail("values must not be empty");
  for (double v : s.values)
    if (!(v >= 0.0 && v <= 1.0)) fail("values must lie in [0,1]");
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
    if (s.values[i] == s.values[i + 1]) fail("adjacent values must differ");

  if (root.contains("breakpoints")) s.breakpoints = number_array(root["breakpoints"], "breakpoints");
  if (s.breakpoints.size() + 1 != s.values.size())
    fail("values needs exactly one more entry than breakpoints");
  for (std::size_t i = 0; i + 1 < s.breakpoints.size(); ++i)
    if (!(s.breakpoints[i] < s.breakpoints[i + 1])) fail("breakpoints must increase strictly");

  if (root.contains("horizon")) s.horizon = positive_number(root["horizon"], "horizon");

  if (root.contains("policy")) {
    const json& p = root["policy"];
    if (!p.is_object()) fail("policy must be an object");
    reject_unknown(p, {"increasing", "delta"}, "policy");
    const std::string mode = p.value("increasing", "keep");
    if (mode == "keep") {
      s.policy = Policy::keep();
    } else if (mode == "rarefy") {
      if (!p.contains("delta")) fail("rarefy policy needs \"delta\"");
      s.policy = Policy::rarefy(positive_number(p["delta"], "policy.delta"));
    } else {
      fail("policy.increasing must be \"keep\" or \"rarefy\"");
    }
  }

  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) fail("seed must be a nonnegative integer");
    s.seed = root["seed"].get<std::uint64_t>();
  }

  if (root.contains("representation")) {
    const json& r = root["representation"];
    if (!r.is_object()) fail("representation must be an object");
    reject_unknown(r, {"n_x", "n_v", "window"}, "representation");
    if (r.contains("n_x")) s.representation.n_x = positive_count(r["n_x"], "representation.n_x");
    if (r.contains("n_v")) s.representation.n_v = positive_count(r["n_v"], "representation.n_v");
    if (r.contains("window")) {
      const auto w = number_array(r["window"], "representation.window");
      if (w.size() != 2 || !(w[0] < w[1])) fail("representation.window must be [lo, hi] with lo < hi");
      s.representation.window_lo = w[0];
      s.representation.window_hi = w[1];
    }
  }

  if (root.contains("transport_collapse")) {
    const json& t = root["transport_collapse"];
    if (!t.is_object()) fail("transport_collapse must be an object");
    reject_unknown(t, {"tau", "dx", "dv", "box"}, "transport_collapse");
    TransportCollapseSpec tc;
    if (t.contains("tau")) tc.tau = positive_number(t["tau"], "transport_collapse.tau");
    if (t.contains("dx")) tc.dx = positive_number(t["dx"], "transport_collapse.dx");
    if (t.contains("dv")) tc.dv = positive_number(t["dv"], "transport_collapse.dv");
    if (t.contains("box")) {
      const auto b = number_array(t["box"], "transport_collapse.box");
      if (b.size() != 2 || !(b[0] < b[1])) fail("transport_collapse.box must be [lo, hi] with lo < hi");
      tc.box_lo = b[0];
      tc.box_hi = b[1];
    }
    s.transport_collapse = tc;
  }

  if (root.contains("anchors")) {
    const json& a = root["anchors"];
    if (!a.is_object()) fail("anchors must be an object");
    reject_unknown(a, {"n_t", "n_x", "t_lo", "t_hi", "x_lo", "x_hi", "samples"}, "anchors");
    if (a.contains("n_t")) s.anchors.n_t = positive_count(a["n_t"], "anchors.n_t");
    if (a.contains("n_x")) s.anchors.n_x = positive_count(a["n_x"], "anchors.n_x");
    if (a.contains("samples")) s.anchors.samples = positive_count(a["samples"], "anchors.samples");
    auto opt = [&](const char* key) -> std::optional<double> {
      if (!a.contains(key)) return std::nullopt;
      if (!a[key].is_number()) fail(std::string("anchors.") + key + " must be a number");
      return a[key].get<double>();
    };
    s.anchors.t_lo = opt("t_lo");
    s.anchors.t_hi = opt("t_hi");
    s.anchors.x_lo = opt("x_lo");
    s.anchors.x_hi = opt("x_hi");
  }

  if (root.contains("epsilons")) {
    s.epsilons = number_array(root["epsilons"], "epsilons");
    if (s.epsilons.empty()) fail("epsilons must not be empty");
    for (double e : s.epsilons)
      if (!(e > 0.0)) fail("epsilons must be positive");
  }

  if (root.contains("entropies")) {
    if (!root["entropies"].is_number_unsigned()) fail("entropies must be a nonnegative integer");
    s.entropies = root["entropies"].get<std::size_t>();
  }

  if (root.contains("limits")) {
    const json& l = root["limits"];
    if (!l.is_object()) fail("limits must be an object");
    reject_unknown(l, {"max_events"}, "limits");
    if (l.contains("max_events")) s.limits.max_events = positive_count(l["max_events"], "limits.max_events");
  }

  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (!t.is_object()) fail("tolerances must be an object");
    reject_unknown(t, {"pushforward", "quadrature", "exact"}, "tolerances");
    if (t.contains("pushforward"))
      s.tolerances.pushforward = positive_number(t["pushforward"], "tolerances.pushforward");
    if (t.contains("quadrature"))
      s.tolerances.quadrature = positive_number(t["quadrature"], "tolerances.quadrature");
    if (t.contains("exact")) s.tolerances.exact = positive_number(t["exact"], "tolerances.exact");
  }

  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace burgers
