#pragma once

#include <string>
#include <vector>

namespace burgers {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured numbers and the bound they were held to
};

/// Runs the twelve release checks with tolerances pinned in the
/// implementation. Results come back in id order; nothing throws short of
/// resource exhaustion, a failed check is reported, not raised.
std::vector<CriterionResult> run_acceptance();

}  // namespace burgers
