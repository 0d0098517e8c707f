// Release gate: prints one PASS/FAIL line per criterion, exits nonzero if
// any fails.
#include <cstdio>

#include "burgers/acceptance.hpp"
#include "burgers/common.hpp"

int main() {
  burgers::global_thread_count() = 4;
  const std::vector<burgers::CriterionResult> results = burgers::run_acceptance();
  bool all = true;
  for (const burgers::CriterionResult& r : results) {
    all = all && r.pass;
    std::printf("%s %2d %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
  }
  return all ? 0 : 1;
}
