#pragma once

#include <cstdint>

#include "steklov/radial_solution.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov {

/// Residual tolerance (relative to the largest term) for the integral inequality checks.
inline constexpr double kInequalityTol = 1e-6;

/// Integrals of u = phi(r) Y over the collar {R - width <= r <= R} and over
/// the boundary, with Y a degree-1 spherical harmonic normalized so that
/// int_{S^n} Y^2 = 1 (hence int |grad Y|^2 = n). phi is normalized to phi(R) = 1.
struct ModeIntegrals {
  double hessian_sq = 0.0;       // int |Hess u|^2 dv
  double gradient_sq = 0.0;      // int |grad u|^2 dv
  double ricci_gradient = 0.0;   // int Ric(grad u, grad u) dv
  double boundary_tangential_sq = 0.0;  // int_Sigma |grad^T u|^2 dS
  double boundary_normal_sq = 0.0;      // int_Sigma u_nu^2 dS
};

/// Pointwise |Hess u|^2 for u = phi(r) Y with Y a degree-1 harmonic, from the
/// radial data (phi, phi', phi'') and the angular data Y, |grad_S Y|^2.
[[nodiscard]] double warped_hessian_sq(const WarpedProfile& p, double r, double phi, double dphi,
                                       double ddphi, double Y, double grad_Y_sq);

[[nodiscard]] ModeIntegrals mode_integrals(const RadialSolution& mode, double collar_width,
                                           double quad_tol = 1e-10);

/// Compares warped_hessian_sq with a finite-difference Hessian of
/// u = phi_test(r) x_1 taken in geodesic normal coordinates (exponential map
/// integrated numerically) at random points. Returns the largest relative error.
[[nodiscard]] double validate_hessian_reduction(const WarpedProfile& p, int points = 20,
                                                std::uint64_t seed = 0);

struct ReillyCheck {
  double sigma1 = 0.0;
  double hessian_term = 0.0;   // int_{M_r} |Hess f|^2
  double gradient_term = 0.0;  // (a1 + a2 sigma) int_{M_r} |grad f|^2
  double boundary_term = 0.0;  // (a3 - 2 sigma) int_Sigma |grad^T f|^2
  double rhs = 0.0;            // sum of the three terms; the inequality says rhs <= 0
  double residual = 0.0;       // rhs / largest |term|
  double identity_residual = 0.0;  // relative defect of Reilly's identity on all of M
  double hessian_validation_error = 0.0;
  bool holds = false;          // residual <= kInequalityTol
};

/// Evaluates the Reilly-type inequality
///   0 >= int_{M_r}|Hess f|^2 + (a1 + a2 sigma) int_{M_r}|grad f|^2 + (a3 - 2 sigma) int_Sigma |grad^T f|^2
/// for f the l = 1 Steklov eigenfunction, and the underlying Reilly identity.
/// Throws OracleError when the Hessian reduction fails validation.
[[nodiscard]] ReillyCheck reilly_inequality_check(const WarpedProfile& p, double a1, double a2, double a3,
                                                  double collar_r);
[[nodiscard]] ReillyCheck reilly_inequality_check(const WarpedProfile& p, double a1, double a2, double a3);

struct CollarCheck {
  double boundary_term = 0.0;  // eps int_Sigma |grad^T u|^2
  double hessian_term = 0.0;   // int_{M_delta} |Hess u|^2
  double gradient_term = 0.0;  // eps (eps + E(delta)) int_{M_delta} |grad u|^2
  double kernel_E = 0.0;
  double residual = 0.0;       // (boundary - hessian - gradient) / largest term
  bool holds = false;
};

/// eps int_Sigma |grad^T u|^2 <= int_{M_delta}|Hess u|^2 + eps (eps + E(delta)) int_{M_delta}|grad u|^2
/// for u the l = 1 eigenfunction, E from the profile's curvature data.
[[nodiscard]] CollarCheck collar_inequality_check(const WarpedProfile& p, double epsilon, double delta);

}  // namespace steklov
