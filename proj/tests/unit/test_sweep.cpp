#include <doctest.h>

#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"
#include "steklov/sweep.hpp"

using namespace steklov;

namespace {
GeometricData unit_ball() {
  GeometricData g;
  g.n = 2;
  g.kappa_lower = g.kappa_upper = 1.0;
  g.mean_lower = g.mean_upper = 2.0;
  g.rolling_radius = g.collar_radius = 1.0;
  return g;
}
}  // namespace

TEST_CASE("rows sit strictly inside the window") {
  const auto t = delta_sweep(unit_ball(), 2);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].delta == doctest::Approx(1.0 / 3));
  CHECK(t.rows[1].delta == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS((void)delta_sweep(unit_ball(), 1), InvalidInput);
}

TEST_CASE("bound_A peaks at the row nearest the optimal delta") {
  const auto t = delta_sweep(unit_ball(), 5);
  const double dstar = std::sqrt(2.0) - 1;
  std::size_t nearest = 0, top = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (std::abs(t.rows[i].delta - dstar) < std::abs(t.rows[nearest].delta - dstar)) nearest = i;
    if (t.rows[i].bound_A > t.rows[top].bound_A) top = i;
  }
  // E(1/3) = E(1/2) = 6, so two rows share the maximum.
  CHECK(std::abs(t.rows[nearest].bound_A - t.rows[top].bound_A) <= 1e-12);
}

TEST_CASE("columns are finite and delta increases") {
  GeometricData g = unit_ball();
  g.sec_upper_collar = 0.5;
  g.ric_upper_collar = 1.0;
  const auto t = delta_sweep(g, 200);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    CHECK(std::isfinite(r.E));
    CHECK(std::isfinite(r.bound_A));
    if (i) CHECK(r.delta > t.rows[i - 1].delta);
  }
}

TEST_CASE("Ricci columns appear only when the P window covers the grid") {
  GeometricData g = unit_ball();
  g.rolling_radius = g.collar_radius = 0.4;  // E-window 0.4 < P-window 0.5
  const auto t = delta_sweep(g, 4);
  CHECK(t.has_ricci);
  std::ostringstream os;
  write_csv(os, t);
  CHECK(os.str().rfind("delta,E,F,bound_A,P,Q,bound_C\n", 0) == 0);
  CHECK_FALSE(delta_sweep(unit_ball(), 4).has_ricci);
}

TEST_CASE("parallel and serial sweeps agree exactly") {
  GeometricData g = unit_ball();
  g.sec_upper_collar = 0.5;
  const auto a = delta_sweep(g, 1000);
  const auto b = serial::delta_sweep(g, 1000);
  std::ostringstream sa, sb;
  write_csv(sa, a);
  write_csv(sb, b);
  CHECK(sa.str() == sb.str());
}
