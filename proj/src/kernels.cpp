#include "steklov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr int kBracketSamples = 64;
constexpr int kRefineSamples = 1024;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

// -B + sqrt(B^2 + C) without cancellation when B > 0.
double root_gap(double B, double C) {
  const double disc = B * B + C;
  if (disc < 0.0) throw DomainError("negative discriminant in epsilon recursion");
  const double s = std::sqrt(disc);
  if (B > 0.0) return C / (B + s);
  return s - B;
}

double safe_eval(const std::function<double(double)>& fn, double x) {
  try {
    const double v = fn(x);
    return std::isfinite(v) ? v : kInfinity;
  } catch (const DomainError&) {
    return kInfinity;
  }
}

bool is_unimodal(const std::vector<double>& v, std::size_t k) {
  for (std::size_t i = 1; i <= k; ++i)
    if (v[i] > v[i - 1]) return false;
  for (std::size_t i = k + 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

struct Bracket {
  double lo, hi;
  double best_x, best_v;
  bool unimodal;
};

Bracket scan(const std::function<double(double)>& fn, double lo, double hi, int samples) {
  std::vector<double> xs(samples), vs(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = lo + (hi - lo) * (i + 1) / (samples + 1);
    vs[i] = safe_eval(fn, xs[i]);
  }
  const auto k = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  Bracket b;
  b.lo = k == 0 ? lo : xs[k - 1];
  b.hi = k + 1 == xs.size() ? hi : xs[k + 1];
  b.best_x = xs[k];
  b.best_v = vs[k];
  b.unimodal = is_unimodal(vs, k);
  return b;
}

}  // namespace

double delta_sup(double r, double beta, double K) {
  if (!(r > 0.0)) throw InvalidInput("delta_sup: r must be > 0");
  if (!(K > 0.0) || !std::isfinite(K)) throw InvalidInput("delta_sup: K must be > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidInput("delta_sup: beta must be >= 0");
  const double t = beta > 0.0 ? std::atan(beta / K) / beta : 1.0 / K;
  return std::min(r, t);
}

ComparisonKernel ComparisonKernel::E(int n, double beta, double K) {
  if (n < 1) throw InvalidInput("kernel E: n must be >= 1");
  if (!(beta >= 0.0)) throw InvalidInput("kernel E: beta must be >= 0");
  if (!(K > 0.0)) throw InvalidInput("kernel E: K must be > 0");
  return {Family::E, static_cast<double>(n), beta, K};
}

ComparisonKernel ComparisonKernel::P(double b, double H) {
  if (!(b >= 0.0)) throw InvalidInput("kernel P: b must be >= 0");
  if (!(H > 0.0)) throw InvalidInput("kernel P: H must be > 0");
  return {Family::P, 1.0, b, H};
}

double ComparisonKernel::mean_curvature_bound(double delta) const {
  const double T = singular_time();
  if (!(delta > 0.0) || delta >= T - kSingularityGuard) {
    std::ostringstream os;
    os << "kernel evaluated at delta=" << delta << " outside (0, " << T << ")";
    throw DomainError(os.str());
  }
  const double c = curvature_;
  const double K = initial_;
  double frac;
  if (c > 0.0) {
    const double t = std::tan(c * delta);
    const double den = c - K * t;
    if (!(den > 0.0)) throw DomainError("kernel denominator non-positive");
    frac = (c * c * t + c * K) / den;
  } else {
    const double den = 1.0 - K * delta;
    if (!(den > 0.0)) throw DomainError("kernel denominator non-positive");
    frac = K / den;
  }
  return multiplier_ * frac;
}

double ComparisonKernel::operator()(double delta) const {
  return mean_curvature_bound(delta) + 1.0 / delta;
}

double kernel_E(double delta, int n, double beta, double K) {
  return ComparisonKernel::E(n, beta, K)(delta);
}

double kernel_F(double delta, int n, double beta, double K, double kappa) {
  return 2.0 * kernel_E(delta, n, beta, K) - n * kappa;
}

double kernel_P(double delta, double b, double H) { return ComparisonKernel::P(b, H)(delta); }

double kernel_Q(double delta, double b, double H, int n, double kappa) {
  return 2.0 * kernel_P(delta, b, H) - n * kappa;
}

double kernel_T(double delta, int n, double beta, double K, double h) {
  return 2.0 * kernel_E(delta, n, beta, K) - h;
}

WindowMinimum minimize_on_window(const std::function<double(double)>& fn, double lo, double hi,
                                 double tol) {
  if (!(hi > lo)) throw DomainError("minimize_on_window: empty window");
  Bracket br = scan(fn, lo, hi, kBracketSamples);
  const bool unimodal = br.unimodal;
  if (!unimodal) br = scan(fn, lo, hi, kRefineSamples);
  if (!std::isfinite(br.best_v)) throw DomainError("minimize_on_window: function not finite on window");

  double a = br.lo;
  double b = br.hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = safe_eval(fn, c);
  double fd = safe_eval(fn, d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = safe_eval(fn, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = safe_eval(fn, d);
    }
  }
  WindowMinimum out;
  out.delta = 0.5 * (a + b);
  out.value = safe_eval(fn, out.delta);
  if (br.best_v < out.value) {
    out.delta = br.best_x;
    out.value = br.best_v;
  }
  out.unimodal = unimodal;
  return out;
}

WindowMinimum optimize_delta(const ComparisonKernel& kernel, double window_sup, double tol) {
  if (!(window_sup > 0.0)) throw DomainError("optimize_delta: empty window");
  const double hi = std::min(window_sup, kernel.singular_time());
  if (kernel.curvature() == 0.0) {
    // d/dd [m K/(1-Kd) + 1/d] = 0  <=>  sqrt(m) K d = 1 - K d
    double d = 1.0 / (kernel.initial() * (1.0 + std::sqrt(kernel.multiplier())));
    if (d >= hi) d = hi * (1.0 - 1e-12);
    return {d, kernel(d), true, true};
  }
  return minimize_on_window([&kernel](double d) { return kernel(d); }, 0.0, hi, tol);
}

double collar_epsilon(double E_val, double a_sq) { return root_gap(E_val, 4.0 * a_sq) / 2.0; }

double fixed_point_epsilon(double E_val, int n, double kappa, double a_sq) {
  const double F = 2.0 * E_val - n * kappa;
  return root_gap(F, 8.0 * n * kappa * kappa + 16.0 * a_sq) / 4.0;
}

double fixed_point_epsilon_mean_convex(double E_val, double h, double kappa, double a_sq) {
  const double T = 2.0 * E_val - h;
  return root_gap(T, 8.0 * h * kappa + 16.0 * a_sq) / 4.0;
}

namespace {

template <class Update>
std::vector<double> run_iteration(double start, Update update, double tol, int max_iter) {
  if (!(tol > 0.0)) throw InvalidInput("iteration tolerance must be > 0");
  std::vector<double> trace{start};
  for (int i = 0; i < max_iter; ++i) {
    const double prev = trace.back();
    const double next = update(prev);
    if (!(next > prev)) return trace;
    trace.push_back(next);
    if (next - prev < tol) return trace;
  }
  throw ConvergenceError("epsilon iteration did not converge within max_iter");
}

}  // namespace

std::vector<double> iterate_epsilon(double E_val, int n, double kappa, double a_sq, double tol,
                                    int max_iter) {
  const double base = 2.0 * n * kappa * kappa + 4.0 * a_sq;
  return run_iteration(
      0.0, [&](double eps) { return root_gap(E_val, base + 2.0 * n * kappa * eps) / 2.0; }, tol,
      max_iter);
}

std::vector<double> iterate_epsilon_mean_convex(double E_val, double h, double kappa, double a_sq,
                                                double tol, int max_iter) {
  const double eps1 = collar_epsilon(E_val, a_sq);
  return run_iteration(
      eps1,
      [&](double eps) { return root_gap(E_val, 4.0 * a_sq + 2.0 * h * (kappa + eps)) / 2.0; },
      tol, max_iter);
}

}  // namespace steklov
