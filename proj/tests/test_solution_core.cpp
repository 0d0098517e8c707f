#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "burgers/evolve.hpp"
#include "burgers/front_solution.hpp"
#include "burgers/profile.hpp"
#include "burgers/riemann.hpp"

using namespace burgers;

TEST_CASE("profile validation and queries") {
  Profile p = Profile::checked({0.0, 1.0}, {0.0, 1.0, 0.0});
  CHECK(p.integral() == 1.0);
  CHECK(p.value_at(0.0) == 0.0);   // left trace at a breakpoint
  CHECK(p.value_at(0.5) == 1.0);
  CHECK(p.value_at(1.0) == 1.0);
  CHECK(p.value_at(1.5) == 0.0);
  CHECK(p.value_at(-3.0) == 0.0);

  CHECK_THROWS_AS(Profile::checked({1.0, 1.0}, {0.0, 0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(Profile::checked({0.0, 1.0}, {0.0, 1.5, 0.0}), DomainError);
  CHECK_THROWS_AS(Profile::checked({0.0, 1.0}, {0.0, -0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(Profile::checked({0.0, 1.0}, {0.5, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(Profile::checked({0.0, 1.0}, {0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(Profile::checked({0.0}, {0.0, 0.0, 0.0}), DomainError);

  Profile q = Profile::normalized({0.0, 0.5, 1.0}, {0.0, 0.7, 0.7, 0.0});
  CHECK(q.breakpoints == std::vector<double>{0.0, 1.0});
  CHECK(q.values == std::vector<double>{0.0, 0.7, 0.0});
  Profile r = Profile::normalized({0.0, 0.0, 1.0}, {0.0, 0.3, 0.7, 0.0});
  CHECK(r.breakpoints == std::vector<double>{0.0, 1.0});
  CHECK(r.values == std::vector<double>{0.0, 0.7, 0.0});
  Profile s = Profile::normalized({0.0, 1.0}, {1e-16, 0.4, -1e-16});
  CHECK(s.values.front() == 0.0);
  CHECK(s.values.back() == 0.0);
}

TEST_CASE("jump resolution") {
  SUBCASE("downward jump gives one entropic front") {
    auto out = riemann_resolve(1.0, 0.0, Policy::keep());
    REQUIRE(out.size() == 1);
    CHECK(out[0].sigma == 0.5);
    CHECK(out[0].cls == FrontClass::entropic);
    auto out2 = riemann_resolve(1.0, 0.0, Policy::rarefy(0.25));
    REQUIRE(out2.size() == 1);
    CHECK(out2[0].cls == FrontClass::entropic);
  }
  SUBCASE("upward jump kept") {
    auto out = riemann_resolve(0.0, 1.0, Policy::keep());
    REQUIRE(out.size() == 1);
    CHECK(out[0].sigma == 0.5);
    CHECK(out[0].cls == FrontClass::anti_entropic);
  }
  SUBCASE("upward jump split into equal pieces") {
    auto out = riemann_resolve(0.0, 1.0, Policy::rarefy(0.25));
    REQUIRE(out.size() == 4);
    const double sigmas[] = {0.125, 0.375, 0.625, 0.875};
    for (int i = 0; i < 4; ++i) {
      CHECK(out[i].sigma == sigmas[i]);
      CHECK(out[i].u_l == 0.25 * i);
      CHECK(out[i].u_r == 0.25 * (i + 1));
      CHECK(out[i].cls == FrontClass::anti_entropic);
    }
    for (int i = 1; i < 4; ++i) CHECK(out[i - 1].u_r == out[i].u_l);
  }
  SUBCASE("piece count rounds up, pieces stay below the step") {
    auto out = riemann_resolve(0.0, 1.0, Policy::rarefy(0.3));
    REQUIRE(out.size() == 4);
    for (const auto& b : out) CHECK(b.u_r - b.u_l == 0.25);
  }
  SUBCASE("small upward jump stays whole") {
    auto out = riemann_resolve(0.2, 0.3, Policy::rarefy(0.5));
    REQUIRE(out.size() == 1);
    CHECK(out[0].u_l == 0.2);
    CHECK(out[0].u_r == 0.3);
  }
  SUBCASE("equal states give nothing") { CHECK(riemann_resolve(0.4, 0.4, Policy::keep()).empty()); }
  SUBCASE("bad step throws") { CHECK_THROWS_AS(Policy::rarefy(0.0), DomainError); }
}

TEST_CASE("single front with open tails") {
  FrontSolution sol = evolve_open({0.0}, {1.0, 0.0}, 1.0, Policy::keep());
  REQUIRE(sol.fronts().size() == 1);
  CHECK(sol.events().empty());
  CHECK_FALSE(sol.compact_tails());
  const Front& f = sol.fronts()[0];
  CHECK(f.sigma == 0.5);
  CHECK(f.cls == FrontClass::entropic);
  CHECK(f.t_birth == 0.0);
  CHECK(f.t_death == 1.0);

  CHECK(sol.evaluate(0.5, 0.2) == 1.0);
  CHECK(sol.evaluate(0.5, 0.25) == 1.0);        // left trace on the front
  CHECK(sol.evaluate_right(0.5, 0.25) == 0.0);  // right trace on the front
  CHECK(sol.evaluate(0.5, 0.3) == 0.0);
  CHECK(sol.evaluate(1.0, 0.49) == 1.0);
  CHECK_THROWS_AS(sol.mass(0.5), UsageError);
  CHECK_THROWS_AS(sol.evaluate(1.5, 0.0), DomainError);
  sol.validate();
}

TEST_CASE("two shocks merge at an exact point") {
  FrontSolution sol = evolve_open({0.0, 1.0}, {1.0, 0.5, 0.0}, 3.0, Policy::keep());
  REQUIRE(sol.fronts().size() == 3);
  REQUIRE(sol.events().size() == 1);
  const InteractionEvent& ev = sol.events()[0];
  CHECK(ev.time == 2.0);
  CHECK(ev.x == 1.5);
  CHECK(ev.incoming == std::vector<std::size_t>{0, 1});
  CHECK(ev.outgoing == std::vector<std::size_t>{2});

  const Front& merged = sol.fronts()[2];
  CHECK(merged.u_l == 1.0);
  CHECK(merged.u_r == 0.0);
  CHECK(merged.sigma == 0.5);
  CHECK(merged.t_birth == 2.0);
  CHECK(merged.t_death == 3.0);
  CHECK(merged.x_birth == 1.5);
  CHECK(sol.fronts()[0].t_death == 2.0);
  CHECK(sol.fronts()[1].t_death == 2.0);

  REQUIRE(sol.band_count() == 2);
  CHECK(sol.band_starts()[0] == 0.0);
  CHECK(sol.band_starts()[1] == 2.0);
  CHECK(sol.band_fronts(0) == std::vector<std::size_t>{0, 1});
  CHECK(sol.band_fronts(1) == std::vector<std::size_t>{2});

  CHECK(sol.evaluate(2.0, 1.5) == 1.0);
  CHECK(sol.evaluate_right(2.0, 1.5) == 0.0);
  Slice s = sol.slice_at(1.0);
  CHECK(s.positions == std::vector<double>{0.75, 1.25});
  CHECK(s.values == std::vector<double>{1.0, 0.5, 0.0});
  CHECK(s.front_ids == std::vector<std::size_t>{0, 1});
  sol.validate();
}

TEST_CASE("rarefied hump overtakes the lead shock") {
  Profile u0 = Profile::checked({0.0, 1.0}, {0.0, 1.0, 0.0});
  FrontSolution sol = evolve(u0, 5.0, Policy::rarefy(0.5));
  REQUIRE(sol.fronts().size() == 4);
  REQUIRE(sol.events().size() == 1);
  CHECK(sol.events()[0].time == 4.0);
  CHECK(sol.events()[0].x == 3.0);

  const Front& merged = sol.fronts()[3];
  CHECK(merged.u_l == 0.5);
  CHECK(merged.u_r == 0.0);
  CHECK(merged.sigma == 0.25);
  CHECK(merged.cls == FrontClass::entropic);

  CHECK(sol.compact_tails());
  CHECK(sol.mass(0.0) == 1.0);
  CHECK(sol.mass(4.5) == 1.0);
  CHECK(sol.mass(5.0) == 1.0);
  CHECK(sol.alive_fronts(4.0) == std::vector<std::size_t>{0, 3});

  OleinikReport rep = oleinik_report(sol, 1.0);
  CHECK(rep.quotient == 1.0);  // the fan steepens exactly like 1/t
  CHECK(rep.largest_upward_jump == 0.5);
  CHECK_FALSE(rep.unbounded);
  // Near the overtake the plateau ahead of the shock shrinks below the fan
  // resolution, so the quotient picks up the step/gap ratio instead of 1/t.
  OleinikReport rep2 = oleinik_report(sol, 2.0);
  CHECK(rep2.quotient == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kept upward jump is flagged as unbounded steepness") {
  Profile u0 = Profile::checked({0.0, 1.0}, {0.0, 1.0, 0.0});
  FrontSolution sol = evolve(u0, 2.0, Policy::keep());
  CHECK(sol.events().empty());  // both fronts move at speed 1/2
  OleinikReport rep = oleinik_report(sol, 1.0);
  CHECK(rep.unbounded);
  CHECK(rep.largest_upward_jump == 1.0);
  CHECK(sol.mass(2.0) == 1.0);
}

TEST_CASE("fine fan decays like 1/t") {
  // The closing shock sits far away so the fan alone sets the quotient.
  Profile u0 = Profile::checked({0.0, 100.0}, {0.0, 1.0, 0.0});
  FrontSolution sol = evolve(u0, 2.0, Policy::rarefy(0.1));
  CHECK(sol.events().empty());
  CHECK(sol.fronts().size() == 11);
  CHECK(oleinik_report(sol, 1.0).quotient == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oleinik_report(sol, 2.0).quotient == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(oleinik_report(sol, 1.0).unbounded);
}

TEST_CASE("multi-collision run conserves mass and stays ordered") {
  Profile u0 =
      Profile::checked({0.0, 0.5, 1.0, 1.5, 2.0}, {0.0, 0.9, 0.1, 0.7, 0.3, 0.0});
  FrontSolution sol = evolve(u0, 6.0, Policy::keep());
  sol.validate();
  REQUIRE(sol.events().size() == 2);
  CHECK(sol.events()[0].time == doctest::Approx(10.0 / 7.0).epsilon(1e-14));
  CHECK(sol.events()[1].time == doctest::Approx(5.0).epsilon(1e-14));
  for (double t : {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 5.5, 6.0})
    CHECK(sol.mass(t) == doctest::Approx(1.0).epsilon(1e-12));

  // Same inputs, same bits.
  FrontSolution again = evolve(u0, 6.0, Policy::keep());
  REQUIRE(again.fronts().size() == sol.fronts().size());
  for (std::size_t i = 0; i < sol.fronts().size(); ++i) {
    CHECK(again.fronts()[i].t_birth == sol.fronts()[i].t_birth);
    CHECK(again.fronts()[i].t_death == sol.fronts()[i].t_death);
    CHECK(again.fronts()[i].x_birth == sol.fronts()[i].x_birth);
    CHECK(again.fronts()[i].sigma == sol.fronts()[i].sigma);
  }
}

TEST_CASE("limits and misuse") {
  CHECK_THROWS_AS(evolve_open({0.0, 1.0}, {1.0, 0.5, 0.0}, 3.0, Policy::keep(), {0}),
                  ResourceError);
  CHECK_THROWS_AS(evolve_open({0.0}, {1.0, 0.0}, 0.0, Policy::keep()), DomainError);
  CHECK_THROWS_AS(evolve_open({0.0}, {1.0, 1.0}, 1.0, Policy::keep()),
                  DomainError);  // equal adjacent states never meet a front
  // Chain mismatch: the front's states disagree with the tails.
  Front odd = Front::make(0.0, 0.0, 0.5, 0.2);
  odd.t_death = 1.0;
  CHECK_THROWS_AS(FrontSolution({0.0}, {1.0, 0.0}, {odd}, {}, 1.0, Policy::keep()),
                  DomainError);
}
