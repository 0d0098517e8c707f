#include "burgers/front_solution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace burgers {

FrontSolution::FrontSolution(std::vector<double> initial_breaks,
                             std::vector<double> initial_values, std::vector<Front> fronts,
                             std::vector<InteractionEvent> events, double horizon,
                             Policy policy)
    : initial_breaks_(std::move(initial_breaks)),
      initial_values_(std::move(initial_values)),
      fronts_(std::move(fronts)),
      events_(std::move(events)),
      horizon_(horizon),
      policy_(policy) {
  compact_tails_ = !initial_values_.empty() && initial_values_.front() == 0.0 &&
                   initial_values_.back() == 0.0;
  build_bands_();
  check_();
}

void FrontSolution::build_bands_() {
  const double guard = kGuard * (1.0 + horizon_);
  std::vector<double> cuts;
  cuts.push_back(0.0);
  for (const Front& f : fronts_) {
    cuts.push_back(f.t_birth);
    cuts.push_back(f.t_death);
  }
  std::sort(cuts.begin(), cuts.end());
  band_starts_.clear();
  for (double c : cuts) {
    if (c < 0.0 || c >= horizon_ - guard) continue;
    if (!band_starts_.empty() && c - band_starts_.back() <= guard) continue;
    band_starts_.push_back(c);
  }
  if (band_starts_.empty() || band_starts_.front() != 0.0) band_starts_.insert(band_starts_.begin(), 0.0);

  band_order_.assign(band_starts_.size(), {});
  for (std::size_t k = 0; k < band_starts_.size(); ++k) {
    const double t0 = band_starts_[k];
    const double t1 = k + 1 < band_starts_.size() ? band_starts_[k + 1] : horizon_;
    const double mid = 0.5 * (t0 + t1);
    auto& order = band_order_[k];
    for (std::size_t i = 0; i < fronts_.size(); ++i)
      if (fronts_[i].alive(mid)) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double pa = fronts_[a].position(mid);
      const double pb = fronts_[b].position(mid);
      if (pa != pb) return pa < pb;
      if (fronts_[a].sigma != fronts_[b].sigma) return fronts_[a].sigma < fronts_[b].sigma;
      return a < b;
    });
  }
}

void FrontSolution::check_() const {
  if (!(horizon_ > 0.0) || !std::isfinite(horizon_)) throw DomainError("horizon must be positive");
  if (initial_values_.size() != initial_breaks_.size() + 1)
    throw DomainError("initial data needs one more value than breakpoints");
  for (std::size_t i = 1; i < initial_breaks_.size(); ++i)
    if (!(initial_breaks_[i - 1] < initial_breaks_[i]))
      throw DomainError("initial breakpoints must be strictly increasing");
  for (double v : initial_values_)
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) throw DomainError("states must lie in [0,1]");
  for (std::size_t i = 1; i < initial_values_.size(); ++i)
    if (initial_values_[i - 1] == initial_values_[i])
      throw DomainError("adjacent initial values must differ");

  for (std::size_t i = 0; i < fronts_.size(); ++i) {
    const Front& f = fronts_[i];
    const std::string tag = "front " + std::to_string(i) + ": ";
    if (!(f.t_birth >= 0.0) || !(f.t_death <= horizon_) || !(f.t_birth <= f.t_death))
      throw DomainError(tag + "lifetime outside [0, horizon]");
    if (f.u_l == f.u_r) throw DomainError(tag + "endpoints must differ");
    if (f.sigma != 0.5 * (f.u_l + f.u_r)) throw DomainError(tag + "speed is not the state average");
    if (f.cls != (f.u_l > f.u_r ? FrontClass::entropic : FrontClass::anti_entropic))
      throw DomainError(tag + "class does not match the jump direction");
  }

  for (std::size_t k = 0; k < band_starts_.size(); ++k) {
    const auto& order = band_order_[k];
    const std::string tag = "band " + std::to_string(k) + ": ";
    if (order.empty()) {
      if (initial_values_.front() != initial_values_.back())
        throw DomainError(tag + "no fronts but unequal tails");
      continue;
    }
    if (fronts_[order.front()].u_l != initial_values_.front())
      throw DomainError(tag + "leftmost state does not match the left tail");
    if (fronts_[order.back()].u_r != initial_values_.back())
      throw DomainError(tag + "rightmost state does not match the right tail");
    const double t0 = band_starts_[k];
    const double t1 = k + 1 < band_starts_.size() ? band_starts_[k + 1] : horizon_;
    for (std::size_t j = 1; j < order.size(); ++j) {
      const Front& a = fronts_[order[j - 1]];
      const Front& b = fronts_[order[j]];
      if (a.u_r != b.u_l) throw DomainError(tag + "adjacent fronts disagree on the middle state");
      const double slack = 1e-7 * (1.0 + horizon_);
      if (a.position(t0) > b.position(t0) + slack || a.position(t1) > b.position(t1) + slack)
        throw DomainError(tag + "fronts cross inside the band");
    }
  }

  double prev = 0.0;
  for (const InteractionEvent& ev : events_) {
    if (!(ev.time >= prev) || !(ev.time <= horizon_)) throw DomainError("event times must be sorted");
    prev = ev.time;
    for (std::size_t id : ev.incoming)
      if (id >= fronts_.size()) throw DomainError("event references an unknown front");
    for (std::size_t id : ev.outgoing)
      if (id >= fronts_.size()) throw DomainError("event references an unknown front");
  }
}

std::size_t FrontSolution::band_of(double t) const {
  const double guard = kGuard * (1.0 + horizon_);
  if (t < -guard || t > horizon_ + guard) throw DomainError("time outside [0, horizon]");
  auto it = std::upper_bound(band_starts_.begin(), band_starts_.end(), t);
  if (it == band_starts_.begin()) return 0;
  return static_cast<std::size_t>(it - band_starts_.begin()) - 1;
}

double FrontSolution::evaluate(double t, double x) const {
  const auto& order = band_order_[band_of(t)];
  for (std::size_t id : order)
    if (fronts_[id].position(t) >= x) return fronts_[id].u_l;
  return order.empty() ? initial_values_.front() : fronts_[order.back()].u_r;
}

double FrontSolution::evaluate_right(double t, double x) const {
  const auto& order = band_order_[band_of(t)];
  for (std::size_t id : order)
    if (fronts_[id].position(t) > x) return fronts_[id].u_l;
  return order.empty() ? initial_values_.front() : fronts_[order.back()].u_r;
}

Slice FrontSolution::slice_at(double t) const {
  const auto& order = band_order_[band_of(t)];
  Slice s;
  s.values.push_back(order.empty() ? initial_values_.front() : fronts_[order.front()].u_l);
  for (std::size_t id : order) {
    s.positions.push_back(fronts_[id].position(t));
    s.front_ids.push_back(id);
    s.values.push_back(fronts_[id].u_r);
  }
  return s;
}

std::vector<std::size_t> FrontSolution::alive_fronts(double t) const {
  return band_order_[band_of(t)];
}

double FrontSolution::mass(double t) const {
  if (!compact_tails_) throw UsageError("mass needs compact tails");
  const Slice s = slice_at(t);
  double acc = 0.0;
  for (std::size_t i = 1; i < s.positions.size(); ++i)
    acc += s.values[i] * (s.positions[i] - s.positions[i - 1]);
  return acc;
}

}  // namespace burgers
