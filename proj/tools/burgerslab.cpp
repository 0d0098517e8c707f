#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "burgers/common.hpp"
#include "burgers/reports.hpp"
#include "burgers/scenario.hpp"

namespace {

struct Options {
  std::string scenario;
  std::string out = ".";
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Options& opt, bool scenario_required) {
  auto* s = cmd->add_option("--scenario", opt.scenario, "scenario JSON file");
  if (scenario_required) s->required();
  cmd->add_option("--out", opt.out, "output directory (default: current)");
  cmd->add_option("--threads", opt.threads, "worker threads (default: 1)");
  cmd->add_option("--seed", opt.seed, "override the scenario's seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"front-tracking solver and measure diagnostics for u_t + (u^2/2)_x = 0"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* solve = app.add_subcommand("solve", "evolve the data; write fronts.csv, solution.json");
  CLI::App* measures =
      app.add_subcommand("measures", "dissipation rates per front and entropy; write measures.csv/json");
  CLI::App* represent =
      app.add_subcommand("represent", "particle representations; write particles.csv, representation.json");
  CLI::App* concentrate =
      app.add_subcommand("concentrate", "envelope families and tube capture; write curves.csv, concentration.csv/json");
  CLI::App* verify =
      app.add_subcommand("verify-all", "run every release check; write verdict.json");
  for (CLI::App* cmd : {solve, measures, represent, concentrate}) add_common(cmd, opt, true);
  add_common(verify, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    burgers::global_thread_count() = opt.threads > 0 ? opt.threads : 1;
    if (verify->parsed()) {
      if (verify->count("--scenario") > 0) burgers::load_scenario(opt.scenario);
      return burgers::run_verify_all(opt.out) ? 0 : 1;
    }
    burgers::Scenario sc = burgers::load_scenario(opt.scenario);
    CLI::App* cmd = app.get_subcommands().front();
    if (cmd->count("--seed") > 0) sc.seed = opt.seed;
    if (cmd == solve) burgers::run_solve(sc, opt.out);
    if (cmd == measures) burgers::run_measures(sc, opt.out);
    if (cmd == represent) burgers::run_represent(sc, opt.out);
    if (cmd == concentrate) burgers::run_concentrate(sc, opt.out);
    return 0;
  } catch (const burgers::ResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
