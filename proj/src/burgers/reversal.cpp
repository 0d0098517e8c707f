#include "burgers/reversal.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/front_measure.hpp"

namespace burgers {

ReversalReport time_reversal(const FrontSolution& sol) {
  const double T = sol.horizon();

  std::vector<Front> fronts;
  fronts.reserve(sol.fronts().size());
  for (const Front& f : sol.fronts()) {
    Front rf;
    rf.t_birth = T - f.t_death;
    rf.t_death = T - f.t_birth;
    rf.x_birth = -f.position(f.t_death);
    rf.u_l = f.u_r;
    rf.u_r = f.u_l;
    rf.sigma = 0.5 * (f.u_r + f.u_l);
    rf.cls = rf.u_l > rf.u_r ? FrontClass::entropic : FrontClass::anti_entropic;
    fronts.push_back(rf);
  }

  std::vector<InteractionEvent> events;
  events.reserve(sol.events().size());
  for (const InteractionEvent& e : sol.events()) {
    InteractionEvent re;
    re.time = T - e.time;
    re.x = -e.x;
    re.incoming = e.outgoing;
    re.outgoing = e.incoming;
    events.push_back(std::move(re));
  }
  std::sort(events.begin(), events.end(),
            [](const InteractionEvent& a, const InteractionEvent& b) { return a.time < b.time; });

  const Slice end = sol.slice_at(T);
  std::vector<double> raw_breaks(end.positions.rbegin(), end.positions.rend());
  for (double& x : raw_breaks) x = -x;
  std::vector<double> raw_values(end.values.rbegin(), end.values.rend());

  // Fronts meeting exactly at the horizon stack at one point; the reversed
  // initial profile keeps only the outer states of each stack, and a stack
  // whose outer states agree contributes no jump at all.
  std::vector<double> breaks;
  std::vector<double> values;
  values.push_back(raw_values.front());
  for (std::size_t i = 0; i < raw_breaks.size(); ++i) {
    if (!breaks.empty() && raw_breaks[i] == breaks.back()) {
      values.back() = raw_values[i + 1];
    } else {
      breaks.push_back(raw_breaks[i]);
      values.push_back(raw_values[i + 1]);
    }
    if (values.size() >= 2 && values[values.size() - 2] == values.back()) {
      breaks.pop_back();
      values.pop_back();
    }
  }

  ReversalReport report{
      FrontSolution(std::move(breaks), std::move(values), std::move(fronts), std::move(events), T,
                    sol.policy()),
      sol.fronts().size(), 0, 0.0, 0.0, 0.0};

  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    const Front& f = sol.fronts()[i];
    const Front& rf = report.reversed.fronts()[i];
    if ((f.cls == FrontClass::entropic) == (rf.cls == FrontClass::entropic))
      ++report.class_swap_violations;
    report.max_rate_diff = std::max(report.max_rate_diff, std::fabs(nu_rate(f) - nu_rate(rf)));
  }
  for (const FrontMeasure& m : kinetic_measure(sol))
    if (m.sign > 0) report.mu_plus_total += m.total_mass();
  for (const FrontMeasure& m : kinetic_measure(report.reversed))
    if (m.sign < 0) report.mu_minus_total_reversed += m.total_abs_mass();
  return report;
}

}  // namespace burgers
