#pragma once

#include <cstdint>
#include <vector>

#include "steklov/warped_profile.hpp"

namespace steklov {

struct SteklovMode {
  int ell = 0;
  double lambda_ell = 0.0;  // l(l+n-1), eigenvalue of -Laplacian on S^n
  double sigma_ell = 0.0;
  std::uint64_t multiplicity = 1;
};

struct SteklovEstimate {
  std::vector<SteklovMode> modes;  // includes l = 0 (sigma = 0)
  double sigma1 = 0.0;             // min over l >= 1
  int sigma1_ell = 1;
  double error_estimate = 0.0;     // largest per-mode Richardson difference
  bool monotone = true;            // sigma_l non-decreasing over the scanned range
  bool higher_modes_unscanned = false;
};

struct OracleOptions {
  double tol = 1e-9;       // relative accuracy target per mode
  bool early_stop = true;  // stop once sigma_l increased for 3 consecutive l
};

struct ModeValue {
  double sigma = 0.0;
  double error_estimate = 0.0;
};

/// Dimension of the space of degree-l spherical harmonics on S^n.
[[nodiscard]] std::uint64_t harmonic_multiplicity(int n, int ell);

/// Steklov value of the degree-l mode, refined until halving the start radius
/// and the step tolerance changes it by at most tol (relative).
[[nodiscard]] ModeValue mode_sigma_estimate(const WarpedProfile& profile, int ell, double tol = 1e-9);
[[nodiscard]] double mode_sigma(const WarpedProfile& profile, int ell, double tol = 1e-9);

/// Scan of l = 1..L_max, modes evaluated concurrently with OpenMP.
[[nodiscard]] SteklovEstimate steklov_spectrum(const WarpedProfile& profile, int L_max = 10,
                                               const OracleOptions& opts = {});

namespace serial {
/// Reference implementation of steklov_spectrum: modes in order, stopping as
/// soon as the early-stop rule fires. Produces identical results.
[[nodiscard]] SteklovEstimate steklov_spectrum(const WarpedProfile& profile, int L_max = 10,
                                               const OracleOptions& opts = {});
}  // namespace serial

}  // namespace steklov
