#include "steklov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "steklov/errors.hpp"
#include "steklov/radial_solution.hpp"

namespace steklov {

namespace {

constexpr int kMaxRefinements = 4;

double binom(int m, int k) {
  if (k < 0 || m < k) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (m - k + i) / i;
  return out;
}

// Index (into modes, l >= 1) at which the early-stop rule fires, or L_max.
int stop_index(const std::vector<double>& sigma, bool early_stop) {
  const int L = static_cast<int>(sigma.size()) - 1;
  if (!early_stop) return L;
  for (int l = 4; l <= L; ++l) {
    if (sigma[l] > sigma[l - 1] && sigma[l - 1] > sigma[l - 2] && sigma[l - 2] > sigma[l - 3]) return l;
  }
  return L;
}

SteklovEstimate assemble(const WarpedProfile& p, const std::vector<ModeValue>& values, int last) {
  SteklovEstimate est;
  est.modes.push_back({0, 0.0, 0.0, 1});
  est.sigma1 = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= last; ++l) {
    const double lambda = static_cast<double>(l) * (l + p.n() - 1);
    est.modes.push_back({l, lambda, values[l].sigma, harmonic_multiplicity(p.n(), l)});
    est.error_estimate = std::max(est.error_estimate, values[l].error_estimate);
    if (values[l].sigma < est.sigma1) {
      est.sigma1 = values[l].sigma;
      est.sigma1_ell = l;
    }
    if (l >= 2 && values[l].sigma < values[l - 1].sigma) est.monotone = false;
  }
  bool evidence = last >= 4;
  for (int l = last - 2; evidence && l <= last; ++l) evidence = values[l].sigma > values[l - 1].sigma;
  est.higher_modes_unscanned = !evidence;
  return est;
}

void check_args(int L_max) {
  if (L_max < 1) throw InvalidInput("steklov_spectrum: L_max must be >= 1");
}

}  // namespace

std::uint64_t harmonic_multiplicity(int n, int ell) {
  if (n < 1 || ell < 0) throw InvalidInput("harmonic_multiplicity: need n >= 1, l >= 0");
  return static_cast<std::uint64_t>(std::llround(binom(ell + n, n) - binom(ell + n - 2, n)));
}

ModeValue mode_sigma_estimate(const WarpedProfile& profile, int ell, double tol) {
  if (ell < 1) throw InvalidInput("mode_sigma: ell must be >= 1");
  if (!(tol > 0.0)) throw InvalidInput("mode_sigma: tol must be > 0");
  RadialOptions o;
  o.ode_tol = std::clamp(tol * 1e-4, 1e-14, 1e-8);
  double prev = RadialSolution(profile, ell, o).sigma();
  for (int i = 0; i < kMaxRefinements; ++i) {
    o.start_fraction *= 0.5;
    o.ode_tol = std::max(o.ode_tol * 0.5, 5e-15);
    const double next = RadialSolution(profile, ell, o).sigma();
    const double diff = std::abs(next - prev);
    if (diff <= tol * std::max(1.0, std::abs(next))) return {next, diff};
    prev = next;
  }
  std::ostringstream os;
  os << "mode_sigma: no convergence to tol=" << tol << " for ell=" << ell;
  throw OracleError(os.str());
}

double mode_sigma(const WarpedProfile& profile, int ell, double tol) {
  return mode_sigma_estimate(profile, ell, tol).sigma;
}

SteklovEstimate steklov_spectrum(const WarpedProfile& profile, int L_max, const OracleOptions& opts) {
  check_args(L_max);
  std::vector<ModeValue> values(L_max + 1);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int l = 1; l <= L_max; ++l) {
    try {
      values[l] = mode_sigma_estimate(profile, l, opts.tol);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<double> sig(L_max + 1);
  for (int l = 1; l <= L_max; ++l) sig[l] = values[l].sigma;
  return assemble(profile, values, stop_index(sig, opts.early_stop));
}

namespace serial {

SteklovEstimate steklov_spectrum(const WarpedProfile& profile, int L_max, const OracleOptions& opts) {
  check_args(L_max);
  std::vector<ModeValue> values(L_max + 1);
  std::vector<double> sig(L_max + 1);
  int last = L_max;
  for (int l = 1; l <= L_max; ++l) {
    values[l] = mode_sigma_estimate(profile, l, opts.tol);
    sig[l] = values[l].sigma;
    if (opts.early_stop && l >= 4 && sig[l] > sig[l - 1] && sig[l - 1] > sig[l - 2] && sig[l - 2] > sig[l - 3]) {
      last = l;
      break;
    }
  }
  return assemble(profile, values, last);
}

}  // namespace serial

}  // namespace steklov
