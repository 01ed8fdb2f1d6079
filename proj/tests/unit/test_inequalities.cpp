#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steklov/inequalities.hpp"
#include "steklov/radial_solution.hpp"

using namespace steklov;
using std::numbers::pi;

TEST_CASE("linear function on a flat ball has zero Hessian") {
  const auto p = WarpedProfile::flat(3, 1.0);
  const auto I = mode_integrals(RadialSolution(p, 1), 1.0);
  CHECK(std::abs(I.hessian_sq) <= 1e-12);
  // u = r Y with int Y^2 = 1: int |grad u|^2 = int_0^1 (1 + n) r^n dr = 1.
  CHECK(I.gradient_sq == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(I.ricci_gradient == doctest::Approx(0.0));
  CHECK(I.boundary_tangential_sq == doctest::Approx(3.0));
}

TEST_CASE("Hessian reduction against finite differences") {
  CHECK(validate_hessian_reduction(WarpedProfile::flat(2, 1.0)) <= 1e-6);
  CHECK(validate_hessian_reduction(WarpedProfile::spherical(3, 1.0, 1.0)) <= 1e-6);
  CHECK(validate_hessian_reduction(WarpedProfile::hyperbolic(1, 2.0, 0.6)) <= 1e-6);
}

TEST_CASE("Reilly inequality is an equality on the flat ball") {
  const auto chk = reilly_inequality_check(WarpedProfile::flat(2, 1.0), 0.0, 2.0, 1.0);
  CHECK(chk.sigma1 == doctest::Approx(1.0));
  CHECK(std::abs(chk.residual) <= 1e-9);
  CHECK(chk.holds);
  CHECK(chk.identity_residual <= 1e-9);
}

TEST_CASE("Reilly inequality on a cap with its curvature constants") {
  const auto p = WarpedProfile::spherical(2, 1.0, pi / 4);
  const auto g = curvature_data(p);
  const auto chk = reilly_inequality_check(p, g.ric_lower_collar, g.mean_lower, g.kappa_lower);
  CHECK(chk.holds);
  CHECK(chk.identity_residual <= 1e-6);
  // Overstating the Ricci bound breaks the inequality.
  CHECK_FALSE(reilly_inequality_check(p, 10.0, g.mean_lower, g.kappa_lower).holds);
}

TEST_CASE("collar inequality") {
  CHECK(collar_inequality_check(WarpedProfile::flat(2, 1.0), 1.0, 0.25).holds);
  CHECK(collar_inequality_check(WarpedProfile::spherical(2, 1.0, pi / 4), 0.5, pi / 16).holds);
}
