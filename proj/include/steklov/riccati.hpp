#pragma once

#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

/// Solution of y' + y^2 + c = 0, y(0) = y0, in closed form.
struct RiccatiSolution {
  double curvature_const = 0.0;  // c
  double initial_value = 0.0;    // y(0)
  double maximal_time = 0.0;     // right endpoint of existence (may be +infinity)

  static RiccatiSolution make(double curvature_const, double initial_value);

  /// y(t); DomainError outside [0, maximal_time).
  [[nodiscard]] double operator()(double t) const;
};

/// phi' + phi^2 + beta^2 = 0, phi(0) = -K; the sectional-curvature comparison.
[[nodiscard]] double phi_closed(double t, double beta, double K);
[[nodiscard]] double phi_maximal_time(double beta, double K);

/// psi' + psi^2 - alpha^2 = 0, psi(0) = -kappa, for 0 <= alpha <= kappa.
[[nodiscard]] double psi_closed(double t, double alpha, double kappa);
[[nodiscard]] double psi_maximal_time(double alpha, double kappa);

struct StepControl {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int samples = 200;  // uniformly spaced output samples on [0, t_end]
};

struct Trajectory {
  std::vector<double> t;
  std::vector<double> y;
  double effective_end = 0.0;  // < requested end when blow-up was detected
  bool blew_up = false;
};

/// Threshold on |y| above which integration stops and reports blow-up.
inline constexpr double kBlowUpThreshold = 1e12;

/// Adaptive Dormand-Prince integration of y' = -y^2 - c from y(0) = y0.
[[nodiscard]] Trajectory integrate_riccati(double curvature_const, double initial_value,
                                           double t_end, const StepControl& control = {});

enum class ComparisonVariant { sectional, ricci };

/// Upper bound on the mean curvature of the parallel hypersurface at distance
/// delta: E_{beta,K}(delta) - 1/delta (sectional) or P_{b,H}(delta) - 1/delta
/// (ricci). The ricci variant needs 0 <= alpha <= kappa with kappa > 0 and
/// throws InapplicableError otherwise; delta outside the window throws DomainError.
[[nodiscard]] double parallel_H_upper(double delta, const GeometricData& geom,
                                      ComparisonVariant variant);

/// Admissible delta window of the chosen variant for this geometry.
[[nodiscard]] double parallel_H_window(const GeometricData& geom, ComparisonVariant variant);

}  // namespace steklov
