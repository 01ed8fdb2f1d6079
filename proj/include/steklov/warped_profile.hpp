#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "steklov/geometry.hpp"

namespace steklov {

/// Rotationally symmetric geodesic ball: metric dr^2 + f(r)^2 g_{S^n} on [0, R].
class WarpedProfile {
 public:
  enum class Kind { flat, spherical, hyperbolic, custom };

  using Fn = std::function<double(double)>;

  static WarpedProfile flat(int n, double R);
  /// f = sin(sqrt(c) r)/sqrt(c); requires R < pi/(2 sqrt(c)).
  static WarpedProfile spherical(int n, double c, double R);
  /// f = sinh(sqrt(c) r)/sqrt(c).
  static WarpedProfile hyperbolic(int n, double c, double R);
  /// User-supplied analytic f, f', f''. Pole regularity and f > 0 are checked.
  static WarpedProfile custom(int n, double R, Fn f, Fn df, Fn ddf);
  /// Dispatch on a kind name ("flat", "spherical", "hyperbolic"); c ignored for flat.
  static WarpedProfile from_kind(std::string_view kind, int n, double c, double R);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::string_view kind_name() const;
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double c() const { return c_; }
  [[nodiscard]] double R() const { return R_; }

  [[nodiscard]] double f(double r) const { return f_(r); }
  [[nodiscard]] double df(double r) const { return df_(r); }
  [[nodiscard]] double ddf(double r) const { return ddf_(r); }

  /// Sectional curvature of planes containing d/dr: -f''/f.
  [[nodiscard]] double sec_radial(double r) const;
  /// Sectional curvature of planes tangent to the spheres: (1 - f'^2)/f^2.
  [[nodiscard]] double sec_tangential(double r) const;
  /// Ric(d/dr, d/dr) = -n f''/f.
  [[nodiscard]] double ric_radial(double r) const;
  /// Ric on unit vectors tangent to the spheres: -f''/f + (n-1)(1 - f'^2)/f^2.
  [[nodiscard]] double ric_tangential(double r) const;

  /// Metric rescaling by s: f -> s f(./s), R -> s R. Every Steklov eigenvalue divides by s.
  [[nodiscard]] WarpedProfile scaled(double s) const;

 private:
  WarpedProfile(Kind k, int n, double c, double R, Fn f, Fn df, Fn ddf);
  void check_regularity() const;

  Kind kind_;
  int n_;
  double c_;
  double R_;
  Fn f_, df_, ddf_;
};

/// Number of collar sample points used by curvature_data.
inline constexpr int kCurvatureSamples = 1024;

/// GeometricData of the geodesic ball with collar [R - collar_r, R]. Curvature
/// extremes come from dense sampling with parabolic refinement; the boundary is
/// umbilic with principal curvature f'(R)/f(R). Non-convex boundaries produce
/// kappa <= 0, which the bound theorems gate on.
[[nodiscard]] GeometricData curvature_data(const WarpedProfile& profile, double collar_r);
[[nodiscard]] GeometricData curvature_data(const WarpedProfile& profile);

/// Exact mean curvature n f'(R-delta)/f(R-delta) of the parallel sphere at distance delta.
[[nodiscard]] double parallel_mean_curvature_exact(const WarpedProfile& profile, double delta);

}  // namespace steklov
