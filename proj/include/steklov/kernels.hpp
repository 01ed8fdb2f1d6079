#pragma once

// Scalar bound kernels built from the comparison Riccati solutions:
//   E_{beta,K}(d) = n * beta * tan(beta d + atan(K/beta)) + 1/d   (beta > 0)
//                 = n K / (1 - K d) + 1/d                       (beta = 0)
// P_{b,H} is the same expression with n = 1 and parameters (b, H).

#include <functional>
#include <limits>
#include <vector>

namespace steklov {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Evaluation points closer than this to a kernel's singularity are rejected.
inline constexpr double kSingularityGuard = 1e-12;

/// delta_{r,beta,K} = min{r, atan(beta/K)/beta}, or min{r, 1/K} when beta = 0.
/// r may be +infinity, in which case the bare existence time is returned.
[[nodiscard]] double delta_sup(double r, double beta, double K);

/// One of the two kernel families, with its parameters fixed.
class ComparisonKernel {
 public:
  enum class Family { E, P };

  /// E_{beta,K} for boundary dimension n.
  static ComparisonKernel E(int n, double beta, double K);
  /// P_{b,H}.
  static ComparisonKernel P(double b, double H);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] double multiplier() const { return multiplier_; }
  [[nodiscard]] double curvature() const { return curvature_; }
  [[nodiscard]] double initial() const { return initial_; }

  /// Right endpoint of the interval on which the kernel is finite.
  [[nodiscard]] double singular_time() const { return delta_sup(kInfinity, curvature_, initial_); }

  /// Kernel value; DomainError unless 0 < delta < singular_time() - kSingularityGuard.
  [[nodiscard]] double operator()(double delta) const;

  /// The kernel minus 1/delta, i.e. the comparison bound on the mean curvature
  /// of the parallel hypersurface at distance delta.
  [[nodiscard]] double mean_curvature_bound(double delta) const;

 private:
  ComparisonKernel(Family f, double mult, double curv, double init)
      : family_(f), multiplier_(mult), curvature_(curv), initial_(init) {}

  Family family_;
  double multiplier_;
  double curvature_;
  double initial_;
};

[[nodiscard]] double kernel_E(double delta, int n, double beta, double K);
[[nodiscard]] double kernel_F(double delta, int n, double beta, double K, double kappa);
[[nodiscard]] double kernel_P(double delta, double b, double H);
[[nodiscard]] double kernel_Q(double delta, double b, double H, int n, double kappa);
[[nodiscard]] double kernel_T(double delta, int n, double beta, double K, double h);

struct WindowMinimum {
  double delta = 0.0;
  double value = 0.0;
  bool closed_form = false;  // true when the flat-branch formula was used
  bool unimodal = true;      // bracket scan saw a single descent/ascent
};

/// Minimizes an arbitrary function over the open interval (lo, hi): a 64-point
/// bracket scan, a 1024-point refinement if the scan is not unimodal, then
/// golden-section search to an absolute tolerance on the argument.
/// Non-finite values and DomainError are treated as +infinity.
[[nodiscard]] WindowMinimum minimize_on_window(const std::function<double(double)>& fn, double lo,
                                               double hi, double tol = 1e-10);

/// Minimizer of the kernel over (0, window_sup). For the flat branch the
/// closed form 1/(K(1+sqrt(n))) (resp. 1/(2H)) is used, clipped to the window.
[[nodiscard]] WindowMinimum optimize_delta(const ComparisonKernel& kernel, double window_sup,
                                           double tol = 1e-10);

/// Closed-form limit of the iteration below:
/// (n kappa - 2E + sqrt((n kappa - 2E)^2 + 8(n kappa^2 + 2a^2))) / 4.
[[nodiscard]] double fixed_point_epsilon(double E_val, int n, double kappa, double a_sq);

/// eps_0 = 0, eps_{i+1} = (-E + sqrt(E^2 + 2n kappa^2 + 4a^2 + 2n kappa eps_i)) / 2.
/// Returns every iterate, starting with eps_0. The returned trace is strictly
/// increasing; iteration stops when the increment drops below tol or vanishes
/// in floating point. Throws ConvergenceError after max_iter steps.
[[nodiscard]] std::vector<double> iterate_epsilon(double E_val, int n, double kappa, double a_sq,
                                                  double tol = 1e-12, int max_iter = 100000);

/// Limit of the mean-convex iteration:
/// (h - 2E + sqrt((h - 2E)^2 + 8 h kappa + 16 a^2)) / 4.
[[nodiscard]] double fixed_point_epsilon_mean_convex(double E_val, double h, double kappa,
                                                     double a_sq);

/// eps_1 = (-E + sqrt(E^2 + 4a^2)) / 2,
/// eps_{i+1} = (-E + sqrt(E^2 + 4a^2 + 2h(kappa + eps_i))) / 2.
/// Requires kappa + eps_1 > 0 for the sequence to increase.
[[nodiscard]] std::vector<double> iterate_epsilon_mean_convex(double E_val, double h, double kappa,
                                                              double a_sq, double tol = 1e-12,
                                                              int max_iter = 100000);

/// (-E + sqrt(E^2 + 4a^2)) / 2, the positive root of a^2 - eps^2 - eps E = 0.
[[nodiscard]] double collar_epsilon(double E_val, double a_sq);

}  // namespace steklov
