#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"

using namespace steklov;

namespace {

GeometricData unit_ball(int n = 2) {
  GeometricData g;
  g.n = n;
  g.kappa_lower = g.kappa_upper = 1.0;
  g.mean_lower = g.mean_upper = n;
  g.rolling_radius = g.collar_radius = 1.0;
  return g;
}

GeometricData cap_like() {
  GeometricData g = unit_ball(2);
  g.ric_lower_global = g.ric_lower_collar = 2.0;
  g.ric_upper_collar = 2.0;
  g.sec_upper_collar = 1.0;
  g.rolling_radius = g.collar_radius = std::numbers::pi / 4;
  return g;
}

}  // namespace

TEST_CASE("unit ball, sectional bound") {
  const auto r = theorem_A_bound(unit_ball());
  REQUIRE(r.applicable);
  CHECK(*r.delta_star == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
  CHECK(*r.kernels.E == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.bound == doctest::Approx(0.599456).epsilon(1e-6));
  CHECK(r.bound == doctest::Approx(0.5 + 0.5 * testref::fixed_point(3 + 2 * std::sqrt(2.0), 2, 1, 0)).epsilon(1e-12));
  CHECK(r.bound > 0.5);
  CHECK(r.bound <= 1.0);
}

TEST_CASE("forced delta bypasses the optimizer but not the window") {
  BoundOptions o;
  o.delta = 0.1;
  const auto r = theorem_A_bound(unit_ball(), o);
  CHECK(*r.kernels.E == doctest::Approx(2 / 0.9 + 10).epsilon(1e-13));
  CHECK(r.bound < theorem_A_bound(unit_ball()).bound);
  o.delta = 1.0;
  CHECK_THROWS_AS((void)theorem_A_bound(unit_ball(), o), DomainError);
}

TEST_CASE("gates report reasons instead of throwing") {
  GeometricData g = unit_ball();
  g.kappa_lower = -0.5;
  g.mean_lower = -1.0;
  const auto r = theorem_A_bound(g);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.reasons.empty());

  GeometricData neg = unit_ball();
  neg.ric_lower_global = -1.0;
  CHECK_FALSE(theorem_A_bound(neg).applicable);
}

TEST_CASE("Ricci-collar bounds on a cap") {
  const auto g = cap_like();
  const auto e = theorem_E_bound(g);
  const auto f = theorem_F_bound(g);
  REQUIRE(e.applicable);
  REQUIRE(f.applicable);
  const double eps1 = (-*e.kernels.E + std::sqrt(*e.kernels.E * *e.kernels.E + 8.0)) / 2;
  CHECK(e.bound == doctest::Approx(0.5 * (1.0 + eps1)).epsilon(1e-12));
  CHECK(f.bound >= e.bound);
  CHECK(f.epsilon_trace.front() == doctest::Approx(eps1).epsilon(1e-12));
}

TEST_CASE("mean-convex bound defers when h = 0") {
  GeometricData g = cap_like();
  g.mean_lower = 0.0;
  g.kappa_lower = 0.0;
  const auto f = theorem_F_bound(g);
  CHECK_FALSE(f.applicable);
}

TEST_CASE("mean-convex bound with h = n kappa recovers the sectional bound") {
  const auto g = cap_like();
  for (double d : {0.1, 0.3, 0.6}) {
    BoundOptions o;
    o.delta = d;
    CHECK(theorem_F_bound(g, o).bound == doctest::Approx(theorem_A_bound(g, o).bound).epsilon(1e-13));
  }
}

TEST_CASE("Ricci upper bound variant on the unit ball") {
  const auto r = theorem_C_bound(unit_ball());
  REQUIRE(r.applicable);
  CHECK(*r.kernels.P == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(*r.kernels.Q == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(r.bound == doctest::Approx(0.5 + 0.5 * testref::fixed_point(8.0, 2, 1, 0)).epsilon(1e-12));
  CHECK(r.bound == doctest::Approx(0.5700).epsilon(1e-4));

  GeometricData g = unit_ball();
  g.sec_lower_collar = -1.0;  // alpha = kappa: still admissible
  CHECK(theorem_C_bound(g).applicable);
  g.sec_lower_collar = -1.21;
  CHECK_FALSE(theorem_C_bound(g).applicable);
}

TEST_CASE("rolling radius lower bound") {
  // atanh(1/2)/2 with beta = 0 and K large enough not to bind
  CHECK(corollary_B_rolling_lower(1.0, 2.0, 0.0, 0.5) == doctest::Approx(std::atanh(0.5) / 2).epsilon(1e-14));
  CHECK(corollary_B_rolling_lower(1.0, 2.0, 0.0, 0.5) == doctest::Approx(0.274653).epsilon(1e-6));
  CHECK(corollary_B_rolling_lower(1.0, 2.0, 0.0, 10.0) == doctest::Approx(0.1));
  CHECK(std::isfinite(corollary_B_rolling_lower(2.0, 1.0, 1.0, 2.0)));
  CHECK_THROWS_AS((void)corollary_B_rolling_lower(1.0, 0.0, 0.0, 1.0), InvalidInput);

  GeometricData g = unit_ball();
  g.rolling_radius = g.collar_radius = 5.0;
  g.sec_lower_collar = -4.0;
  const auto r = corollary_B_bound(g);
  REQUIRE(r.applicable);
  CHECK(r.kernels.window == doctest::Approx(std::atanh(0.5) / 2).epsilon(1e-12));
}

TEST_CASE("baselines") {
  GeometricData g1 = unit_ball(1);
  const auto b1 = escobar_baselines(g1);
  CHECK(b1[0].applicable);
  CHECK(b1[0].bound == 1.0);
  CHECK_FALSE(b1[1].applicable);
  const auto b2 = escobar_baselines(unit_ball(2));
  CHECK_FALSE(b2[0].applicable);
  CHECK(b2[1].bound == 0.5);
  CHECK(b2[1].strict);
}

TEST_CASE("spectral gap") {
  const auto gap = spectral_gap(2, 2.0, 2.0);
  REQUIRE(gap);
  CHECK(gap->lower == doctest::Approx(0.5));
  CHECK(gap->upper == doctest::Approx(1.0));
  const double coth = 1 / std::tanh(0.5);
  const auto h = spectral_gap(2, 2.0, coth);
  REQUIRE(h);
  CHECK(h->lower == doctest::Approx(0.46212).epsilon(1e-5));
  CHECK(h->upper == doctest::Approx(1.08198).epsilon(1e-5));
  CHECK_FALSE(spectral_gap(2, 2.0, std::sqrt(2.0)));  // boundary: empty interval
  CHECK_FALSE(spectral_gap(2, 2.0, 1.0));
}

TEST_CASE("best bound takes the maximum applicable theorem") {
  const auto g = cap_like();
  const auto best = best_bound(g);
  REQUIRE(best.applicable);
  double top = 0;
  for (const auto& s : best.sub_reports)
    if (s.applicable && s.theorem != Theorem::SpectralGap) top = std::max(top, s.bound);
  CHECK(best.bound == top);
  CHECK(best_bound(unit_ball()).theorem == Theorem::ThmA);
}

TEST_CASE("theorem names") {
  CHECK(theorem_from_string("A") == Theorem::ThmA);
  CHECK(theorem_from_string("corB") == Theorem::CorB);
  CHECK(theorem_from_string(to_string(Theorem::ThmF)) == Theorem::ThmF);
  CHECK_FALSE(theorem_from_string("Z"));
}

TEST_CASE("invalid geometry is rejected") {
  GeometricData g = unit_ball();
  g.collar_radius = 2.0;
  CHECK_THROWS_AS((void)theorem_A_bound(g), InvalidInput);
  g = unit_ball();
  g.kappa_upper = 0.5;
  CHECK_THROWS_AS((void)theorem_A_bound(g), InvalidInput);
}
