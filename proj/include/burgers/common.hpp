#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace burgers {

/// Input violates a documented precondition.
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound was exceeded.
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two objects that must belong together do not match.
class UsageError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Guard band for event-time and position comparisons.
inline constexpr double kGuard = 1e-12;

/// Deterministic 64-bit generator (splitmix64). Same seed, same stream,
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform index in [0,n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % (n ? n : 1);
  }

 private:
  std::uint64_t state_;
};

/// Global worker count for parallel_for. Defaults to 1 (serial).
unsigned& global_thread_count();

/// Index-parallel loop. Results must be written by index so the outcome is
/// independent of the thread count.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const std::size_t nt = std::min<std::size_t>(global_thread_count(), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  const std::size_t chunk = (n + nt - 1) / nt;
  for (std::size_t w = 0; w < nt; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace burgers
