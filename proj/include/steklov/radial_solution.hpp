#pragma once

#include <array>
#include <vector>

#include "steklov/warped_profile.hpp"

namespace steklov {

struct RadialOptions {
  double start_fraction = 1e-6;  // r0 = start_fraction * R
  double ode_tol = 1e-13;        // absolute and relative step tolerance
};

/// Regular solution of phi'' + n (f'/f) phi' - lambda phi / f^2 = 0 with
/// lambda = l(l+n-1), i.e. the radial factor of the harmonic function phi(r) Y_l.
///
/// Integrated in s = ln r for the state (W, psi) with W = r phi'/phi and
/// psi = ln phi:
///   W' = W + lambda r^2/f^2 - n (r f'/f) W - W^2,   psi' = W,
/// starting at r0 from the leading pole behaviour phi ~ r^l (W = l). Accepted
/// steps are kept as checkpoints so that phi can be evaluated anywhere on
/// [0, R] by a short re-integration from the nearest checkpoint.
class RadialSolution {
 public:
  RadialSolution(const WarpedProfile& profile, int ell, const RadialOptions& opts = {});

  struct Value {
    double phi;    // normalized so that phi(R) = 1
    double dphi;   // phi'
    double ddphi;  // phi''
  };

  /// Steklov value of the mode: phi'(R)/phi(R).
  [[nodiscard]] double sigma() const { return sigma_; }
  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] double lambda() const { return lambda_; }
  [[nodiscard]] Value operator()(double r) const;
  [[nodiscard]] const WarpedProfile& profile() const { return profile_; }

 private:
  using State = std::array<double, 2>;
  void rhs(const State& x, State& dx, double s) const;
  [[nodiscard]] State state_at(double s) const;

  WarpedProfile profile_;
  int ell_;
  double lambda_;
  RadialOptions opts_;
  double s0_ = 0.0;
  double psi_R_ = 0.0;
  double sigma_ = 0.0;
  std::vector<double> ck_s_;
  std::vector<State> ck_x_;
};

}  // namespace steklov
