#pragma once

#include <string>
#include <vector>

namespace steklov {

/// Curvature and convexity data of a manifold with boundary, as consumed by the
/// bound kernels. Curvature bounds are stored as the bound itself (length^-2),
/// so sec_lower_collar = -alpha^2 and sec_upper_collar = beta^2. Ricci bounds
/// are per unit vector: Ric(v,v) >= value * |v|^2.
struct GeometricData {
  int n = 1;                      // boundary dimension; the manifold has dimension n+1
  double ric_lower_global = 0.0;  // lower Ricci bound on all of M
  double ric_lower_collar = 0.0;  // a^2 on the collar M_r
  double ric_upper_collar = 0.0;  // b^2 on the collar
  double sec_upper_collar = 0.0;  // beta^2 on the collar
  double sec_lower_collar = 0.0;  // -alpha^2 on the collar
  double kappa_lower = 0.0;       // lower bound on principal curvatures of the boundary
  double kappa_upper = 0.0;       // upper bound on principal curvatures
  double mean_lower = 0.0;        // lower bound h on mean curvature
  double mean_upper = 0.0;        // upper bound on mean curvature
  double rolling_radius = 0.0;    // distance from the boundary to its cut locus
  double collar_radius = 0.0;     // radius of the collar on which collar bounds hold

  [[nodiscard]] double a_sq() const { return ric_lower_collar; }
  [[nodiscard]] double b() const;
  [[nodiscard]] double beta() const;
  [[nodiscard]] double alpha() const;

  /// Uniform metric rescaling g -> s^2 g: lengths scale by s, curvatures by 1/s^2,
  /// principal curvatures by 1/s.
  [[nodiscard]] GeometricData scaled(double s) const;
};

/// Structural invariants (orderings, finiteness, sign conventions). Sign
/// conditions that only gate individual theorems (kappa_lower > 0 etc.) are
/// not checked here.
[[nodiscard]] std::vector<std::string> invariant_violations(const GeometricData& geom);

/// Throws InvalidInput listing every violated invariant.
void validate(const GeometricData& geom);

}  // namespace steklov
