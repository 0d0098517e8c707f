#pragma once

#include <string>

#include "burgers/lagrangian.hpp"
#include "burgers/scenario.hpp"

namespace burgers {

/// Hypograph representation requested by a scenario: windowed when a window
/// is given, complete when the data has compact support. Throws UsageError
/// when neither applies.
LagrangianRep scenario_hypograph_rep(const Scenario& sc, const FrontSolution& sol);

/// Each runner solves the scenario, writes its CSV/JSON outputs under
/// out_dir, and leaves byte-identical files on reruns with the same inputs.
void run_solve(const Scenario& sc, const std::string& out_dir);
void run_measures(const Scenario& sc, const std::string& out_dir);
void run_represent(const Scenario& sc, const std::string& out_dir);
void run_concentrate(const Scenario& sc, const std::string& out_dir);

/// Runs the full acceptance suite, prints one PASS/FAIL line per criterion,
/// writes verdict.json under out_dir. Returns false when any criterion fails.
bool run_verify_all(const std::string& out_dir);

}  // namespace burgers
