#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "burgers/bump.hpp"
#include "burgers/entropy.hpp"
#include "burgers/evolve.hpp"
#include "burgers/geometry.hpp"
#include "burgers/kinetic.hpp"
#include "burgers/profile.hpp"
#include "test_support.hpp"

using namespace burgers;
using testsupport::simpson;

namespace {

FrontSolution single_shock(double horizon = 1.0) {
  return evolve_open({0.0}, {1.0, 0.0}, horizon, Policy::keep());
}

double line_integral_oracle(const TensorBump2& phi, double t0, double t1, double x0,
                            double slope) {
  return simpson([&](double t) { return phi.value(t, x0 + slope * t); }, t0, t1, 4000);
}

}  // namespace

TEST_CASE("bump calculus") {
  const Bump b(0.0, 1.0);
  CHECK(b.value(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.value(0.0) == 0.0);
  CHECK(b.value(1.0) == 0.0);
  CHECK(b.value(-0.1) == 0.0);
  CHECK(b.value(1.1) == 0.0);
  CHECK_THROWS_AS(Bump(1.0, 1.0), DomainError);

  // Derivative against central differences.
  const double h = 1e-6;
  for (double y : {0.13, 0.4, 0.55, 0.92}) {
    const double fd = (b.value(y + h) - b.value(y - h)) / (2.0 * h);
    CHECK(b.deriv(y) == doctest::Approx(fd).epsilon(1e-6));
  }

  // Antiderivatives against Simpson.
  for (double y : {0.2, 0.5, 0.8, 1.0}) {
    CHECK(b.integral_to(y) ==
          doctest::Approx(simpson([&](double s) { return b.value(s); }, 0.0, y)).epsilon(1e-10));
    CHECK(b.moment1_to(y) ==
          doctest::Approx(simpson([&](double s) { return s * b.value(s); }, 0.0, y))
              .epsilon(1e-10));
  }
  CHECK(b.integral() == b.integral_to(1.0));
  CHECK(b.integral_to(2.0) == b.integral_to(1.0));
  CHECK(b.integral_to(-1.0) == 0.0);

  const Bump shifted(-2.0, 3.0);
  CHECK(shifted.value(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shifted.knots()[0] == -2.0);
  CHECK(shifted.knots()[5] == 3.0);
  CHECK(shifted.integral_to(3.0) ==
        doctest::Approx(simpson([&](double s) { return shifted.value(s); }, -2.0, 3.0))
            .epsilon(1e-10));
}

TEST_CASE("piecewise Gauss quadrature and Green identities") {
  SUBCASE("1d integration is exact on bump pieces") {
    const Bump b(0.0, 1.0);
    const double exact = b.integral();
    const auto ks = b.knots();
    const std::vector<double> knots(ks.begin(), ks.end());
    const double got = integrate_1d([&](double y) { return b.value(y); }, 0.0, 1.0, knots);
    CHECK(got == doctest::Approx(exact).epsilon(1e-14));
    const double rev = integrate_1d([&](double y) { return b.value(y); }, 1.0, 0.0, knots);
    CHECK(rev == doctest::Approx(-exact).epsilon(1e-14));
  }

  SUBCASE("axis-aligned rectangle recovers the product rule") {
    const TensorBump2 phi{Bump(0.1, 0.9), Bump(-1.0, 1.0)};
    const double t0 = 0.2, t1 = 0.7, x0 = -0.6, x1 = 0.4;
    const std::vector<Point2> rect = {{t0, x0}, {t1, x0}, {t1, x1}, {t0, x1}};
    const GreenIntegrals g = polygon_green(phi, rect);
    const double bx_int = phi.bx.integral_to(x1) - phi.bx.integral_to(x0);
    const double bt_int = phi.bt.integral_to(t1) - phi.bt.integral_to(t0);
    CHECK(g.d_t ==
          doctest::Approx((phi.bt.value(t1) - phi.bt.value(t0)) * bx_int).epsilon(1e-13));
    CHECK(g.d_x ==
          doctest::Approx((phi.bx.value(x1) - phi.bx.value(x0)) * bt_int).epsilon(1e-13));
  }

  SUBCASE("slanted trapezoid matches a Simpson oracle") {
    const TensorBump2 phi{Bump(0.0, 1.0), Bump(-1.0, 2.0)};
    // Left wall x = 0.3 t - 0.5, right wall x = -0.2 t + 0.9, between t in [0.1, 0.8].
    const double t0 = 0.1, t1 = 0.8;
    auto xl = [](double t) { return 0.3 * t - 0.5; };
    auto xr = [](double t) { return -0.2 * t + 0.9; };
    const std::vector<Point2> quad = {
        {t0, xl(t0)}, {t1, xl(t1)}, {t1, xr(t1)}, {t0, xr(t0)}};
    const GreenIntegrals g = polygon_green(phi, quad);
    // d/dx integral over the region via inner antiderivative differences.
    const double oracle_dx = simpson(
        [&](double t) { return phi.bt.value(t) * (phi.bx.value(xr(t)) - phi.bx.value(xl(t))); },
        t0, t1, 4000);
    CHECK(g.d_x == doctest::Approx(oracle_dx).epsilon(1e-11));
    const double oracle_dt = simpson(
        [&](double t) {
          const double inner = phi.bx.integral_to(xr(t)) - phi.bx.integral_to(xl(t));
          return phi.bt.deriv(t) * inner;
        },
        t0, t1, 4000);
    CHECK(g.d_t == doctest::Approx(oracle_dt).epsilon(1e-11));
  }

  SUBCASE("line integral along a slanted segment") {
    const TensorBump2 phi{Bump(0.0, 1.0), Bump(-1.0, 1.0)};
    const double got = integrate_line_t(phi, 0.1, 0.9, 0.0, 0.5, 0.0);
    CHECK(got == doctest::Approx(line_integral_oracle(phi, 0.1, 0.9, 0.0, 0.5)).epsilon(1e-9));
  }
}

TEST_CASE("entropy weak residual localizes dissipation on the jump") {
  const FrontSolution sol = single_shock();
  const EntropyDescriptor quad = EntropyDescriptor::quadratic();
  const TensorBump2 phi{Bump(0.2, 0.8), Bump(-0.5, 1.0)};

  const double along = integrate_line_t(phi, 0.0, 1.0, 0.0, 0.5, 0.0);
  CHECK(along == doctest::Approx(line_integral_oracle(phi, 0.0, 1.0, 0.0, 0.5)).epsilon(1e-9));

  const double wr = weak_residual(sol, quad, phi);
  CHECK(wr == doctest::Approx(-along / 12.0).epsilon(1e-9));
  CHECK(std::fabs(wr - (-along / 12.0)) <= 1e-6);
  CHECK(wr < 0.0);

  CHECK(std::fabs(weak_residual(sol, EntropyDescriptor::linear(), phi)) <= 1e-12);

  const FrontSolution constant({}, {0.3}, {}, {}, 1.0, Policy::keep());
  CHECK(weak_residual(constant, quad, phi) == 0.0);

  const FrontSolution anti = evolve_open({0.0}, {0.0, 1.0}, 1.0, Policy::keep());
  CHECK(weak_residual(anti, quad, phi) == doctest::Approx(along / 12.0).epsilon(1e-9));

  CHECK_THROWS_AS(weak_residual(sol, quad, TensorBump2{Bump(-0.1, 0.5), Bump(-1.0, 1.0)}),
                  DomainError);
  CHECK_THROWS_AS(weak_residual(sol, quad, TensorBump2{Bump(0.5, 1.0), Bump(-1.0, 1.0)}),
                  DomainError);
}

TEST_CASE("conservation-law weak residual vanishes across interactions") {
  SUBCASE("rarefied hump with a fan-shock interaction") {
    const Profile p = Profile::checked({0.0, 1.0}, {0.0, 1.0, 0.0});
    const FrontSolution sol = evolve(p, 5.0, Policy::rarefy(0.5));
    REQUIRE_FALSE(sol.events().empty());
    const TensorBump2 phi{Bump(-0.5, 4.6), Bump(-1.5, 4.0)};
    CHECK(std::fabs(burgers_weak_residual(sol, phi)) <= 1e-10);
  }
  SUBCASE("merging shocks with a nonzero left tail") {
    const FrontSolution sol = evolve_open({0.0, 1.0}, {1.0, 0.5, 0.0}, 3.0, Policy::keep());
    const TensorBump2 phi{Bump(-1.0, 2.5), Bump(-2.0, 3.0)};
    CHECK(std::fabs(burgers_weak_residual(sol, phi)) <= 1e-10);
  }
  SUBCASE("non-interacting mixed pair") {
    const FrontSolution sol = evolve_open({0.0, 2.0}, {0.0, 1.0, 0.0}, 2.0, Policy::keep());
    const TensorBump2 phi{Bump(-0.3, 1.8), Bump(-1.0, 4.0)};
    CHECK(std::fabs(burgers_weak_residual(sol, phi)) <= 1e-10);
  }
  SUBCASE("terminal support must end before the horizon") {
    const FrontSolution sol = single_shock();
    CHECK_THROWS_AS(burgers_weak_residual(sol, TensorBump2{Bump(0.2, 1.0), Bump(-1.0, 1.0)}),
                    DomainError);
  }
}

TEST_CASE("kinetic pairing and the defect sign") {
  CHECK(kinetic_sign() == -1);

  const FrontSolution sol = single_shock();
  // Asymmetric v-support so the moment against (v - sigma) cannot vanish.
  const TensorBump3 psi{Bump(0.2, 0.8), Bump(-0.5, 1.0), Bump(0.1, 0.6)};

  SUBCASE("transport term matches the separable closed form") {
    const KineticPairing kp = kinetic_pairing(sol, psi);
    const double vel_moment =
        psi.bv.moment1_to(0.6) - 0.5 * psi.bv.integral_to(0.6);
    CHECK(std::fabs(vel_moment) > 1e-4);
    const double along =
        integrate_line_t(TensorBump2{psi.bt, psi.bx}, 0.0, 1.0, 0.0, 0.5, 0.0);
    CHECK(kp.transport == doctest::Approx(vel_moment * along).epsilon(1e-12));
    CHECK(kp.transport == doctest::Approx(kinetic_sign() * kp.mu_pairing).epsilon(1e-9));
  }
  SUBCASE("residual is tiny on entropic and anti-entropic jumps") {
    CHECK(kinetic_residual(sol, psi) <= 1e-6);
    const FrontSolution anti = evolve_open({0.0}, {0.0, 1.0}, 1.0, Policy::keep());
    CHECK(kinetic_residual(anti, psi) <= 1e-6);
  }
  SUBCASE("constant states carry no defect") {
    const FrontSolution constant({}, {0.3}, {}, {}, 1.0, Policy::keep());
    const KineticPairing kp = kinetic_pairing(constant, psi);
    CHECK(kp.transport == 0.0);
    CHECK(kp.mu_pairing == 0.0);
  }
  SUBCASE("velocity support must stay inside the unit interval") {
    CHECK_THROWS_AS(kinetic_pairing(sol, TensorBump3{Bump(0.2, 0.8), Bump(-0.5, 1.0),
                                                     Bump(-0.1, 0.5)}),
                    DomainError);
    CHECK_THROWS_AS(kinetic_pairing(sol, TensorBump3{Bump(0.2, 0.8), Bump(-0.5, 1.0),
                                                     Bump(0.5, 1.2)}),
                    DomainError);
  }
  SUBCASE("residual across an interaction-free window of a merged pair") {
    const FrontSolution two = evolve_open({0.0, 2.0}, {0.0, 1.0, 0.0}, 2.0, Policy::keep());
    const TensorBump3 wide{Bump(0.2, 1.8), Bump(-1.0, 4.0), Bump(0.1, 0.6)};
    CHECK(kinetic_residual(two, wide) <= 1e-6);
  }
}

TEST_CASE("local density checks on rectangles") {
  const FrontSolution sol = single_shock();
  const EntropyDescriptor quad = EntropyDescriptor::quadratic();
  const TensorBump2 phi{Bump(0.2, 0.8), Bump(-0.5, 1.0)};
  const double along = integrate_line_t(phi, 0.0, 1.0, 0.0, 0.5, 0.0);

  SUBCASE("trace form equals the weak form on a jump") {
    const RectCheck rc = rect_density_check(sol, quad, phi);
    CHECK(rc.trace_form == doctest::Approx(-along / 12.0).epsilon(1e-12));
    CHECK(rc.weak_form == doctest::Approx(rc.trace_form).epsilon(1e-9));
    CHECK(rc.discrepancy <= 1e-6);
  }
  SUBCASE("affine entropies see nothing") {
    const RectCheck rc = rect_density_check(sol, EntropyDescriptor::linear(), phi);
    CHECK(std::fabs(rc.trace_form) <= 1e-14);
    CHECK(std::fabs(rc.weak_form) <= 1e-14);
  }
  SUBCASE("general states scale with the cube of the jump") {
    const FrontSolution small = evolve_open({0.0}, {0.6, 0.2}, 1.0, Policy::keep());
    const TensorBump2 bump{Bump(0.2, 0.8), Bump(-0.5, 1.0)};
    const double line = integrate_line_t(bump, 0.0, 1.0, 0.0, 0.4, 0.0);
    const RectCheck rc = rect_density_check(small, quad, bump);
    CHECK(rc.trace_form == doctest::Approx(-0.064 / 12.0 * line).epsilon(1e-12));
    CHECK(rc.discrepancy <= 1e-6);
  }
  SUBCASE("windows overlapping an interaction are rejected") {
    const FrontSolution two = evolve_open({0.0, 1.0}, {1.0, 0.5, 0.0}, 3.0, Policy::keep());
    CHECK_THROWS_AS(
        rect_density_check(two, quad, TensorBump2{Bump(1.5, 2.5), Bump(0.0, 3.0)}),
        DomainError);
  }
}
