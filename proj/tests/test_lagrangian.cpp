#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "burgers/evolve.hpp"
#include "burgers/front_solution.hpp"
#include "burgers/lagrangian.hpp"
#include "burgers/policy.hpp"

using namespace burgers;

namespace {

FrontSolution step_down(double T) {
  return evolve_open({0.0}, {1.0, 0.0}, T, Policy::keep());
}

FrontSolution step_up(double T) {
  return evolve_open({0.0}, {0.0, 1.0}, T, Policy::keep());
}

/// Compact hump 1 then 0.5: entropic pair merging at t=2, x=1.5, plus the
/// anti-entropic left edge.
FrontSolution merging_hump(double T) {
  return evolve_open({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.5, 0.0}, T, Policy::keep());
}

/// Compact data with one anti-entropic and two entropic fronts, no events.
FrontSolution mixed_hump(double T) {
  return evolve_open({-1.0, 0.0, 1.0}, {0.0, 0.75, 0.25, 0.0}, T, Policy::keep());
}

}  // namespace

TEST_CASE("reflections follow the receiving-side rule") {
  SUBCASE("hypograph particle overtaking a falling shock reflects down") {
    const auto sol = step_down(2.0);
    const auto traj = trace_particle(sol, Side::hypograph, -0.3, 0.8);
    REQUIRE(traj.jumps.size() == 1);
    CHECK(traj.jumps[0].time == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(traj.jumps[0].front_id == 0);
    CHECK(traj.jumps[0].v_before == 0.8);
    CHECK(traj.jumps[0].v_after == doctest::Approx(0.2).epsilon(1e-14));
    CHECK_FALSE(traj.jumps[0].upward());
    REQUIRE(traj.times.size() == 3);
    CHECK(traj.times.back() == 2.0);
    CHECK(traj.xs[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(traj.x_at(2.0) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(traj.tot_var() == doctest::Approx(0.6).epsilon(1e-14));
  }

  SUBCASE("slow hypograph particle never catches the shock") {
    const auto sol = step_down(2.0);
    const auto traj = trace_particle(sol, Side::hypograph, -0.3, 0.3);
    CHECK(traj.jumps.empty());
    CHECK(traj.times == std::vector<double>{0.0, 2.0});
    CHECK(traj.vs == std::vector<double>{0.3});
    CHECK(traj.x_at(2.0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(traj.tot_var() == 0.0);
  }

  SUBCASE("rising shock catches a hypograph particle and lifts it") {
    const auto sol = step_up(2.0);
    const auto traj = trace_particle(sol, Side::hypograph, 0.4, 0.25);
    REQUIRE(traj.jumps.size() == 1);
    CHECK(traj.jumps[0].time == doctest::Approx(1.6).epsilon(1e-14));
    CHECK(traj.jumps[0].v_after == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(traj.jumps[0].upward());
    CHECK(traj.x_at(traj.jumps[0].time) == doctest::Approx(0.8).epsilon(1e-13));
  }

  SUBCASE("falling shock catches an epigraph particle and lifts it") {
    const auto sol = step_down(3.0);
    const auto traj = trace_particle(sol, Side::epigraph, 0.4, 0.3);
    REQUIRE(traj.jumps.size() == 1);
    CHECK(traj.jumps[0].time == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(traj.jumps[0].v_after == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(traj.jumps[0].upward());
    CHECK(traj.x_at(3.0) == doctest::Approx(1.7).epsilon(1e-13));
  }

  SUBCASE("fast epigraph particle outruns the shock") {
    const auto sol = step_down(3.0);
    const auto traj = trace_particle(sol, Side::epigraph, 0.4, 0.7);
    CHECK(traj.jumps.empty());
    CHECK(traj.x_at(3.0) == doctest::Approx(2.5).epsilon(1e-14));
  }

  SUBCASE("a particle riding a front at its own slope is logged as a tie") {
    const auto sol = step_down(2.0);
    std::size_t ties = 0;
    const auto traj = trace_particle(sol, Side::hypograph, 0.0, 0.5, 1.0, &ties);
    CHECK(ties == 1);
    CHECK(traj.jumps.empty());
    CHECK(traj.x_at(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("reflection conserves the state sum exactly") {
    const auto sol = step_down(3.0);
    for (double v0 = 0.55; v0 < 1.0; v0 += 0.05) {
      const auto traj = trace_particle(sol, Side::hypograph, -0.1, v0);
      REQUIRE(traj.jumps.size() == 1);
      const Front& f = sol.fronts()[traj.jumps[0].front_id];
      CHECK(traj.jumps[0].v_before + traj.jumps[0].v_after == f.u_l + f.u_r);
    }
  }
}

TEST_CASE("trajectory bookkeeping") {
  const auto sol = step_down(2.0);
  const auto traj = trace_particle(sol, Side::hypograph, -0.3, 0.8);

  SUBCASE("velocity evaluation is right-continuous across the jump") {
    CHECK(traj.v_at(0.5) == 0.8);
    CHECK(traj.v_at(traj.times[1]) == traj.vs[1]);
    CHECK(traj.v_at(1.5) == doctest::Approx(0.2).epsilon(1e-14));
  }

  SUBCASE("per-curve measure lists one signed vertical segment per jump") {
    const auto segs = mu_gamma(traj);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].t == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(segs[0].x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(segs[0].v_lo == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(segs[0].v_hi == 0.8);
    CHECK(segs[0].sign == -1);

    const auto up = mu_gamma(trace_particle(step_down(3.0), Side::epigraph, 0.4, 0.3));
    REQUIRE(up.size() == 1);
    CHECK(up[0].sign == +1);
    CHECK(up[0].v_lo == 0.3);
    CHECK(up[0].v_hi == doctest::Approx(0.7).epsilon(1e-14));
  }

  SUBCASE("piecewise-linear identity holds bitwise across a whole rep") {
    const auto rep = build_hypograph_rep(merging_hump(3.0), 40, 40);
    REQUIRE(!rep.trajectories.empty());
    for (const Trajectory& g : rep.trajectories) {
      REQUIRE(g.times.size() == g.xs.size());
      REQUIRE(g.vs.size() + 1 == g.times.size());
      for (std::size_t k = 0; k + 1 < g.times.size(); ++k)
        CHECK(g.xs[k + 1] == g.xs[k] + g.vs[k] * (g.times[k + 1] - g.times[k]));
    }
  }
}

TEST_CASE("hypograph sampling covers the initial area and pushes forward") {
  SUBCASE("complete rep on a compact hump") {
    const auto sol = merging_hump(3.0);
    const auto rep = build_hypograph_rep(sol, 60, 60);
    CHECK(rep.total_weight() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(rep.tie_count == 0);
    CHECK(rep.sampling.complete);
    for (int i = 0; i <= 9; ++i) {
      const double t = 3.0 * i / 9.0;
      CHECK(check_pushforward(rep, sol, t) <= 2.0 / 60.0 + 1e-12);
    }
  }

  SUBCASE("windowed strip rep on open step data") {
    const auto sol = step_down(1.0);
    const auto rep = build_hypograph_rep_windowed(sol, 200, 200, -1.0, 0.0);
    CHECK(rep.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(rep.sampling.complete);
    for (double t : {0.0, 0.4, 1.0})
      CHECK(check_pushforward(rep, sol, t) <= 2.0 / 200.0 + 1e-12);
    CHECK(std::fabs(totvar_integral(rep) - 1.0 / 12.0) < 2.5e-3);
  }

  SUBCASE("epigraph rep complements the solution") {
    const auto sol = step_down(1.0);
    const auto rep = build_epigraph_rep(sol, 100, 100);
    CHECK(rep.sampling.x_lo == -1.0);
    CHECK(rep.sampling.x_hi == 1.0);
    CHECK(rep.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    for (double t : {0.0, 0.5, 1.0})
      CHECK(check_pushforward(rep, sol, t) <= 2.0 / 100.0 + 1e-12);
  }

  SUBCASE("preconditions are enforced") {
    const auto sol = step_down(1.0);
    CHECK_THROWS_AS(build_hypograph_rep(sol, 10, 10), DomainError);
    CHECK_THROWS_AS(build_hypograph_rep_windowed(sol, 10, 10, -2.0, -0.5), DomainError);
    CHECK_THROWS_AS(build_hypograph_rep_windowed(sol, 10, 10, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(build_hypograph_rep(merging_hump(1.0), 0, 10), DomainError);
    const auto rep = build_hypograph_rep_windowed(sol, 10, 10, -1.0, 0.0);
    CHECK_THROWS_AS(check_pushforward(rep, sol, -0.1), DomainError);
    CHECK_THROWS_AS(check_pushforward(rep, sol, 1.1), DomainError);
  }
}

TEST_CASE("jump directions route by front class") {
  SUBCASE("hypograph: down at entropic fronts, up at anti-entropic ones") {
    const auto sol = mixed_hump(2.0);
    const auto rep = build_hypograph_rep(sol, 50, 50);
    std::size_t up = 0, down = 0;
    for (const Trajectory& g : rep.trajectories) {
      for (const JumpRecord& j : g.jumps) {
        const Front& f = sol.fronts()[j.front_id];
        if (j.upward()) {
          ++up;
          CHECK(f.cls == FrontClass::anti_entropic);
        } else {
          ++down;
          CHECK(f.cls == FrontClass::entropic);
        }
      }
    }
    CHECK(up > 0);
    CHECK(down > 0);
  }

  SUBCASE("epigraph: mirrored routing") {
    const auto down_sol = step_down(1.0);
    const auto rep = build_epigraph_rep(down_sol, 50, 50);
    std::size_t jumps = 0;
    for (const Trajectory& g : rep.trajectories)
      for (const JumpRecord& j : g.jumps) {
        ++jumps;
        CHECK(j.upward());
        CHECK(down_sol.fronts()[j.front_id].cls == FrontClass::entropic);
      }
    CHECK(jumps > 0);

    const auto up_sol = step_up(1.0);
    const auto rep2 = build_epigraph_rep(up_sol, 50, 50);
    jumps = 0;
    for (const Trajectory& g : rep2.trajectories)
      for (const JumpRecord& j : g.jumps) {
        ++jumps;
        CHECK_FALSE(j.upward());
        CHECK(up_sol.fronts()[j.front_id].cls == FrontClass::anti_entropic);
      }
    CHECK(jumps > 0);
  }
}

TEST_CASE("assembled jump measure reproduces the front measure") {
  SUBCASE("single falling shock, windowed strip") {
    const auto sol = step_down(1.0);
    const auto rep = build_hypograph_rep_windowed(sol, 200, 200, -1.0, 0.0);
    const auto report = decompose_mu(rep, sol);
    CHECK(report.pairings.size() == 25);
    CHECK(report.max_error <= 3.0 / 200.0 + 1e-6);
    double biggest = 0.0;
    for (const auto& row : report.pairings) {
      biggest = std::max(biggest, std::fabs(row.exact_signed));
      CHECK(row.exact_plus == 0.0);
      CHECK(row.exact_minus >= 0.0);
    }
    CHECK(biggest > 1e-3);
  }

  SUBCASE("mixed hump separates the signs") {
    const auto sol = mixed_hump(2.0);
    const auto rep = build_hypograph_rep(sol, 100, 100);
    const auto report = decompose_mu(rep, sol);
    CHECK(report.max_error <= 3.0 / 100.0 + 1e-6);
    double plus = 0.0, minus = 0.0;
    for (const auto& row : report.pairings) {
      plus = std::max(plus, row.exact_plus);
      minus = std::max(minus, row.exact_minus);
    }
    CHECK(plus > 1e-4);
    CHECK(minus > 1e-4);
  }

  SUBCASE("epigraph rep carries the opposite signed total") {
    const auto sol = step_down(1.0);
    const auto rep = build_epigraph_rep(sol, 100, 100);
    const auto report = decompose_mu(rep, sol);
    CHECK(report.max_error <= 3.0 / 100.0 + 1e-6);
    double biggest = 0.0;
    for (const auto& row : report.pairings)
      biggest = std::max(biggest, std::fabs(row.exact_signed));
    CHECK(biggest > 1e-3);
  }

  SUBCASE("constant solution decomposes to zero") {
    const FrontSolution constant({}, {0.5}, {}, {}, 1.0, Policy::keep());
    const auto rep = build_epigraph_rep(constant, 20, 20);
    const auto report = decompose_mu(rep, constant);
    CHECK(report.max_error == 0.0);
    for (const auto& row : report.pairings) {
      CHECK(row.rep_signed == 0.0);
      CHECK(row.exact_signed == 0.0);
    }
  }

  SUBCASE("rep built on one solution cannot decompose another") {
    const auto sol = step_down(1.0);
    const auto other = evolve_open({0.0}, {0.9, 0.0}, 1.0, Policy::keep());
    const auto rep = build_hypograph_rep_windowed(sol, 20, 20, -1.0, 0.0);
    CHECK(solution_fingerprint(sol) != solution_fingerprint(other));
    CHECK_THROWS_AS(decompose_mu(rep, other), UsageError);
  }
}

TEST_CASE("sampled times off the jump set respect the side condition") {
  const auto sol = step_down(1.0);
  const auto strip = build_hypograph_rep_windowed(sol, 80, 80, -1.0, 0.0);
  CHECK(lebesgue_time_check(strip, sol, 10000, 42) == 0.0);

  const auto hump = merging_hump(3.0);
  const auto rep = build_hypograph_rep(hump, 40, 40);
  CHECK(lebesgue_time_check(rep, hump, 10000, 7) == 0.0);

  const auto epi = build_epigraph_rep(sol, 40, 40);
  CHECK(lebesgue_time_check(epi, sol, 10000, 99) == 0.0);

  const FrontSolution constant({}, {0.5}, {}, {}, 1.0, Policy::keep());
  const auto crep = build_epigraph_rep(constant, 10, 10);
  CHECK(lebesgue_time_check(crep, constant, 1000, 1) == 0.0);
}
