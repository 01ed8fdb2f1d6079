#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

using namespace steklov;
using std::numbers::pi;

TEST_CASE("delta_sup picks the smaller of the radius and the existence time") {
  CHECK(delta_sup(10.0, 0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(delta_sup(0.3, 0.0, 2.0) == 0.3);
  CHECK(delta_sup(kInfinity, 1.0, 1.0) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(delta_sup(kInfinity, 2.0, 1.0) == doctest::Approx(std::atan(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("E matches the quotient form") {
  // 2 tan(3 pi / 8) + 8 / pi
  CHECK(kernel_E(pi / 8, 2, 1.0, 1.0) == doctest::Approx(2 * std::tan(3 * pi / 8) + 8 / pi).epsilon(1e-14));
  CHECK(kernel_E(pi / 8, 2, 1.0, 1.0) == doctest::Approx(7.374906).epsilon(1e-6));
  for (int n : {1, 2, 5})
    for (double beta : {0.0, 0.3, 1.0, 2.5})
      for (double K : {0.2, 1.0, 3.0}) {
        const double T = delta_sup(kInfinity, beta, K);
        for (double frac : {0.05, 0.3, 0.7, 0.95}) {
          const double d = frac * T;
          CHECK(kernel_E(d, n, beta, K) == doctest::Approx(testref::kernel_quotient(d, n, beta, K)).epsilon(1e-12));
        }
      }
}

TEST_CASE("derived kernels") {
  const double d = 0.2;
  const double E = kernel_E(d, 3, 0.5, 1.5);
  CHECK(kernel_F(d, 3, 0.5, 1.5, 0.7) == doctest::Approx(2 * E - 3 * 0.7));
  CHECK(kernel_T(d, 3, 0.5, 1.5, 1.1) == doctest::Approx(2 * E - 1.1));
  const double P = kernel_P(d, 0.4, 2.0);
  CHECK(P == doctest::Approx(testref::kernel_quotient(d, 1, 0.4, 2.0)));
  CHECK(kernel_Q(d, 0.4, 2.0, 3, 0.7) == doctest::Approx(2 * P - 2.1));
}

TEST_CASE("kernel evaluation outside the window is rejected") {
  const auto k = ComparisonKernel::E(2, 0.0, 1.0);
  CHECK_THROWS_AS((void)k(0.0), DomainError);
  CHECK_THROWS_AS((void)k(1.0), DomainError);
  CHECK_THROWS_AS((void)k(1.5), DomainError);
  CHECK_NOTHROW((void)k(0.999));
  CHECK_THROWS_AS((void)k.mean_curvature_bound(1.0 - 1e-14), DomainError);
}

TEST_CASE("flat-branch minimizers are the closed forms") {
  for (int n : {1, 2, 4, 9, 100}) {
    const auto m = optimize_delta(ComparisonKernel::E(n, 0.0, 1.0), kInfinity);
    CHECK(m.closed_form);
    CHECK(m.delta == doctest::Approx(1.0 / (1.0 + std::sqrt(double(n)))).epsilon(1e-14));
    CHECK(m.value == doctest::Approx(std::pow(1.0 + std::sqrt(double(n)), 2)).epsilon(1e-13));
  }
  const auto p = optimize_delta(ComparisonKernel::P(0.0, 2.0), kInfinity);
  CHECK(p.delta == doctest::Approx(0.25));
  CHECK(p.value == doctest::Approx(8.0));
}

TEST_CASE("curved minimizer agrees with a fine grid scan") {
  for (int n : {1, 2, 3})
    for (double beta : {0.5, 1.0, 2.0}) {
      const double K = 1.0;
      const double T = delta_sup(kInfinity, beta, K);
      const auto m = optimize_delta(ComparisonKernel::E(n, beta, K), T);
      const double grid = testref::grid_argmin([&](double d) { return testref::kernel_quotient(d, n, beta, K); },
                                               0.0, T, 200000);
      CHECK(m.unimodal);
      CHECK(std::abs(m.delta - grid) <= 2 * T / 200000);
      CHECK(m.value <= testref::kernel_quotient(grid, n, beta, K) + 1e-12);
    }
}

TEST_CASE("window clipping and empty windows") {
  const auto m = optimize_delta(ComparisonKernel::E(2, 0.0, 1.0), 0.1);
  CHECK(m.delta < 0.1);
  CHECK(m.delta == doctest::Approx(0.1).epsilon(1e-10));
  CHECK_THROWS_AS((void)optimize_delta(ComparisonKernel::E(2, 0.0, 1.0), 0.0), DomainError);
}

TEST_CASE("fixed point and iteration") {
  CHECK(fixed_point_epsilon(std::pow(1 + std::sqrt(2.0), 2), 2, 1.0, 0.0) == doctest::Approx(0.198912).epsilon(1e-5));
  CHECK(fixed_point_epsilon(10.0, 2, 1.0, 0.0) == doctest::Approx(testref::fixed_point(10.0, 2, 1.0, 0.0)).epsilon(1e-13));
  CHECK(fixed_point_epsilon(10.0, 2, 1.0, 0.0) == doctest::Approx((-18 + std::sqrt(340.0)) / 4).epsilon(1e-14));

  const auto tr = iterate_epsilon(std::pow(1 + std::sqrt(2.0), 2), 2, 1.0, 0.0);
  REQUIRE(tr.size() > 3);
  CHECK(tr[0] == 0.0);
  CHECK(tr[1] == doctest::Approx(0.166799).epsilon(1e-5));
  CHECK(tr[2] == doctest::Approx(0.193750).epsilon(1e-5));
  for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i] > tr[i - 1]);
  CHECK(std::abs(tr.back() - testref::fixed_point(std::pow(1 + std::sqrt(2.0), 2), 2, 1.0, 0.0)) <= 1e-11);
}

TEST_CASE("mean-convex recursion starts at the collar epsilon") {
  const double E = 7.0, h = 1.5, kappa = 0.5, a_sq = 2.0;
  const auto tr = iterate_epsilon_mean_convex(E, h, kappa, a_sq);
  CHECK(tr.front() == doctest::Approx(collar_epsilon(E, a_sq)).epsilon(1e-15));
  CHECK(tr.front() == doctest::Approx((-E + std::sqrt(E * E + 4 * a_sq)) / 2));
  auto q = [&](double x) { return 2 * x * x + (2 * E - h) * x - (h * kappa + 2 * a_sq); };
  CHECK(tr.back() == doctest::Approx(testref::bisect(q, 0.0, 10.0)).epsilon(1e-11));
  CHECK(fixed_point_epsilon_mean_convex(E, h, kappa, a_sq) == doctest::Approx(tr.back()).epsilon(1e-11));
}

TEST_CASE("collar epsilon solves a^2 - eps^2 - eps E = 0") {
  for (double E : {0.5, 3.0, 40.0})
    for (double a_sq : {0.0, 0.1, 5.0}) {
      const double e = collar_epsilon(E, a_sq);
      CHECK(std::abs(a_sq - e * e - e * E) <= 1e-12 * (1 + a_sq));
      CHECK(e >= 0.0);
    }
}
