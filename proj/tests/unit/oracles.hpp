#pragma once
// Independent reference computations used by the unit tests. Nothing here
// calls into the library's numerical routines.

#include <cmath>
#include <functional>

namespace testref {

inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Positive root of 2x^2 + (2E - n kappa) x - (n kappa^2 + 2 a^2) = 0, found by bisection.
inline double fixed_point(double E, int n, double kappa, double a_sq) {
  auto q = [&](double x) { return 2 * x * x + (2 * E - n * kappa) * x - (n * kappa * kappa + 2 * a_sq); };
  double hi = 1.0;
  while (q(hi) < 0) hi *= 2;
  return bisect(q, 0.0, hi);
}

// Kernel in its unreduced quotient form (no tangent addition formula).
inline double kernel_quotient(double d, int n, double beta, double K) {
  if (beta == 0.0) return n * K / (1 - K * d) + 1 / d;
  const double t = std::tan(beta * d);
  return n * (beta * beta * t + beta * K) / (beta - K * t) + 1 / d;
}

// Arg-min of fn on a uniform grid of N interior points of (lo, hi).
inline double grid_argmin(const std::function<double(double)>& fn, double lo, double hi, int N) {
  double best = lo, val = INFINITY;
  for (int i = 1; i < N; ++i) {
    const double x = lo + (hi - lo) * i / N;
    const double v = fn(x);
    if (v < val) {
      val = v;
      best = x;
    }
  }
  return best;
}

// Classical fixed-step RK4 for y' = -y^2 - c.
inline double rk4_riccati(double c, double y0, double t, int steps) {
  const double h = t / steps;
  double y = y0;
  auto f = [c](double v) { return -v * v - c; };
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(y), k2 = f(y + 0.5 * h * k1), k3 = f(y + 0.5 * h * k2), k4 = f(y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

}  // namespace testref
