#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/kernels.hpp"

namespace steklov {

enum class Theorem {
  ThmA,            // Ric >= 0, strictly convex boundary, sectional upper bound on the collar
  ThmE,            // positive Ricci on the collar, mean-convex boundary
  ThmF,            // ThmE with strictly mean-convex boundary (iterated)
  ThmC,            // Ricci upper bound and mean curvature upper bound, alpha <= kappa
  CorB,            // ThmA with the rolling radius replaced by its sectional-curvature lower bound
  EscobarSurface,  // n = 1: sigma_1 >= kappa
  EscobarHigher,   // n >= 2: sigma_1 > kappa / 2
  SpectralGap,     // Ric >= -a^2: no eigenvalue in (a^2/(n kappa), kappa/2)
};

[[nodiscard]] std::string_view to_string(Theorem t);
[[nodiscard]] std::optional<Theorem> theorem_from_string(std::string_view s);

struct KernelValues {
  double window = 0.0;  // supremum of admissible delta
  std::optional<double> E, F, P, Q, T;
};

struct GapInterval {
  double lower = 0.0;
  double upper = 0.0;
};

struct BoundReport {
  Theorem theorem = Theorem::ThmA;
  bool applicable = false;
  std::vector<std::string> reasons;  // violated hypotheses when not applicable
  std::vector<std::string> notes;    // e.g. evaluated outside stated hypotheses
  std::optional<double> delta_star;
  KernelValues kernels;
  std::vector<double> epsilon_trace;
  double bound = 0.0;
  bool strict = false;  // the underlying inequality is strict
  std::optional<GapInterval> gap;
  std::vector<BoundReport> sub_reports;
};

struct BoundOptions {
  std::optional<double> delta;  // bypasses optimization; must lie in the window
  double delta_tol = 1e-10;
  double iter_tol = 1e-12;
  int max_iter = 100000;
};

[[nodiscard]] BoundReport theorem_A_bound(const GeometricData& geom, const BoundOptions& opts = {});
[[nodiscard]] BoundReport theorem_E_bound(const GeometricData& geom, const BoundOptions& opts = {});
[[nodiscard]] BoundReport theorem_F_bound(const GeometricData& geom, const BoundOptions& opts = {});
[[nodiscard]] BoundReport theorem_C_bound(const GeometricData& geom, const BoundOptions& opts = {});
[[nodiscard]] BoundReport corollary_B_bound(const GeometricData& geom, const BoundOptions& opts = {});

/// Certified lower bound for the rolling radius from kappa <= kappa_i <= K and
/// -alpha^2 <= Sec <= beta^2: delta_{F(kappa,alpha^2),beta,K} where
/// F(kappa,alpha^2) = atanh(kappa/alpha)/alpha for kappa < alpha, +infinity otherwise.
/// alpha = 0 is unsupported (InvalidInput).
[[nodiscard]] double corollary_B_rolling_lower(double kappa, double alpha, double beta, double K);

/// Escobar's baselines; both entries are returned, the one not matching n gated off.
[[nodiscard]] std::vector<BoundReport> escobar_baselines(const GeometricData& geom);

/// (a^2/(n kappa), kappa/2) when kappa > sqrt(2a^2/n), otherwise nothing.
[[nodiscard]] std::optional<GapInterval> spectral_gap(int n, double a_sq_neg, double kappa);

/// SpectralGap report built from ric_lower_global < 0 and kappa_lower.
[[nodiscard]] BoundReport spectral_gap_report(const GeometricData& geom);

/// Every applicable lower bound, maximum reported; per-theorem reports attached.
[[nodiscard]] BoundReport best_bound(const GeometricData& geom, const BoundOptions& opts = {});

/// Dispatch by theorem (SpectralGap returns the gap report).
[[nodiscard]] BoundReport bound_for(Theorem t, const GeometricData& geom, const BoundOptions& opts = {});

}  // namespace steklov
