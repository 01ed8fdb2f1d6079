#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steklov/errors.hpp"
#include "steklov/riccati.hpp"
#include "steklov/warped_profile.hpp"

using namespace steklov;

TEST_CASE("closed forms agree with a fixed-step RK4") {
  for (double beta : {0.0, 0.7, 1.5})
    for (double K : {0.5, 2.0}) {
      const double t = 0.8 * phi_maximal_time(beta, K);
      CHECK(phi_closed(t, beta, K) == doctest::Approx(testref::rk4_riccati(beta * beta, -K, t, 20000)).epsilon(1e-9));
    }
  for (double alpha : {0.0, 0.5, 1.0})
    for (double kappa : {1.0, 3.0}) {
      const double T = psi_maximal_time(alpha, kappa);
      const double t = std::isinf(T) ? 3.0 : 0.8 * T;
      CHECK(psi_closed(t, alpha, kappa) ==
            doctest::Approx(testref::rk4_riccati(-alpha * alpha, -kappa, t, 20000)).epsilon(1e-9));
    }
}

TEST_CASE("maximal times") {
  CHECK(phi_maximal_time(1.0, 1.0) == doctest::Approx(std::numbers::pi / 4));
  CHECK(phi_maximal_time(0.0, 2.0) == doctest::Approx(0.5));
  CHECK(psi_maximal_time(2.0, 4.0) == doctest::Approx(std::atanh(0.5) / 2));
  CHECK(psi_maximal_time(0.0, 2.0) == doctest::Approx(0.5));
  CHECK(std::isinf(psi_maximal_time(1.0, 1.0)));
  CHECK_THROWS_AS((void)psi_maximal_time(2.0, 1.0), InvalidInput);
}

TEST_CASE("equilibrium solution is constant") {
  for (double t : {0.0, 1.0, 10.0, 100.0}) CHECK(psi_closed(t, 1.5, 1.5) == -1.5);
  const auto tr = integrate_riccati(-2.25, -1.5, 10.0);
  for (double y : tr.y) CHECK(std::abs(y + 1.5) <= 1e-10);
}

TEST_CASE("general solution covers all three signs of c") {
  for (double c : {-4.0, -0.25, 0.0, 0.25, 4.0})
    for (double y0 : {-3.0, -0.1, 0.0, 0.1, 3.0}) {
      const auto s = RiccatiSolution::make(c, y0);
      const double t = std::isinf(s.maximal_time) ? 1.0 : 0.5 * s.maximal_time;
      CHECK(s(t) == doctest::Approx(testref::rk4_riccati(c, y0, t, 20000)).epsilon(1e-9));
    }
}

TEST_CASE("integration detects blow-up") {
  const auto tr = integrate_riccati(1.0, -1.0, 2.0);
  CHECK(tr.blew_up);
  CHECK(tr.effective_end == doctest::Approx(std::numbers::pi / 4).epsilon(1e-6));
}

TEST_CASE("parallel mean-curvature bound is attained on caps") {
  const auto p = WarpedProfile::spherical(2, 1.0, 1.0);
  const auto g = curvature_data(p);
  for (double d : {0.1, 0.4, 0.8}) {
    CHECK(parallel_H_upper(d, g, ComparisonVariant::sectional) ==
          doctest::Approx(2.0 / std::tan(1.0 - d)).epsilon(1e-10));
  }
  CHECK_THROWS_AS((void)parallel_H_upper(1.0, g, ComparisonVariant::sectional), DomainError);
}

TEST_CASE("Ricci variant requires alpha <= kappa") {
  GeometricData g;
  g.n = 2;
  g.kappa_lower = g.kappa_upper = 1.0;
  g.mean_lower = g.mean_upper = 2.0;
  g.rolling_radius = g.collar_radius = 1.0;
  g.sec_lower_collar = -4.0;
  CHECK_THROWS_AS((void)parallel_H_upper(0.1, g, ComparisonVariant::ricci), InapplicableError);
  g.sec_lower_collar = 0.0;
  CHECK(parallel_H_upper(0.1, g, ComparisonVariant::ricci) == doctest::Approx(2.0 / (1 - 0.2)));
}
