#include "steklov/warped_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPoleProbe = 1e-8;
constexpr double kPoleTol = 1e-10;
// Curvature formulas are 0/0 at the pole; sampling starts this fraction of R away from it.
constexpr double kPoleOffset = 1e-3;

struct Extremes {
  double min = kInf();
  double max = -kInf();
  static constexpr double kInf() { return std::numeric_limits<double>::infinity(); }
};

// Dense sampling on [lo, hi] followed by a parabolic step around the extreme sample.
Extremes sample_extremes(const std::function<double(double)>& g, double lo, double hi) {
  const int N = kCurvatureSamples;
  std::vector<double> xs(N), vs(N);
  for (int i = 0; i < N; ++i) {
    xs[i] = (N == 1 || hi == lo) ? hi : lo + (hi - lo) * i / (N - 1);
    vs[i] = g(xs[i]);
  }
  auto refine = [&](std::size_t k, bool want_min) {
    double best = vs[k];
    if (k == 0 || k + 1 >= vs.size()) return best;
    const double den = vs[k + 1] - 2.0 * vs[k] + vs[k - 1];
    if (den == 0.0) return best;
    const double h = xs[k + 1] - xs[k];
    const double x = xs[k] - 0.5 * h * (vs[k + 1] - vs[k - 1]) / den;
    if (x < xs[k - 1] || x > xs[k + 1]) return best;
    const double v = g(x);
    return want_min ? std::min(best, v) : std::max(best, v);
  };
  const auto kmin = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  const auto kmax = static_cast<std::size_t>(std::max_element(vs.begin(), vs.end()) - vs.begin());
  return {refine(kmin, true), refine(kmax, false)};
}

}  // namespace

WarpedProfile::WarpedProfile(Kind k, int n, double c, double R, Fn f, Fn df, Fn ddf)
    : kind_(k), n_(n), c_(c), R_(R), f_(std::move(f)), df_(std::move(df)), ddf_(std::move(ddf)) {
  if (n_ < 1) throw InvalidInput("profile: n must be >= 1");
  if (!(R_ > 0.0) || !std::isfinite(R_)) throw InvalidInput("profile: R must be > 0");
}

WarpedProfile WarpedProfile::flat(int n, double R) {
  return {Kind::flat, n, 0.0, R, [](double r) { return r; }, [](double) { return 1.0; },
          [](double) { return 0.0; }};
}

WarpedProfile WarpedProfile::spherical(int n, double c, double R) {
  if (!(c > 0.0)) throw InvalidInput("spherical profile: c must be > 0");
  const double s = std::sqrt(c);
  if (!(R < std::numbers::pi / (2.0 * s)))
    throw InvalidInput("spherical profile: R must be < pi/(2 sqrt(c))");
  return {Kind::spherical,
          n,
          c,
          R,
          [s](double r) { return std::sin(s * r) / s; },
          [s](double r) { return std::cos(s * r); },
          [s](double r) { return -s * std::sin(s * r); }};
}

WarpedProfile WarpedProfile::hyperbolic(int n, double c, double R) {
  if (!(c > 0.0)) throw InvalidInput("hyperbolic profile: c must be > 0");
  const double s = std::sqrt(c);
  return {Kind::hyperbolic,
          n,
          c,
          R,
          [s](double r) { return std::sinh(s * r) / s; },
          [s](double r) { return std::cosh(s * r); },
          [s](double r) { return s * std::sinh(s * r); }};
}

WarpedProfile WarpedProfile::custom(int n, double R, Fn f, Fn df, Fn ddf) {
  if (!f || !df || !ddf) throw InvalidInput("custom profile: f, f', f'' are all required");
  WarpedProfile p{Kind::custom, n, 0.0, R, std::move(f), std::move(df), std::move(ddf)};
  p.check_regularity();
  return p;
}

WarpedProfile WarpedProfile::from_kind(std::string_view kind, int n, double c, double R) {
  if (kind == "flat") return flat(n, R);
  if (kind == "spherical") return spherical(n, c, R);
  if (kind == "hyperbolic") return hyperbolic(n, c, R);
  throw InvalidInput("unknown profile kind '" + std::string(kind) + "'");
}

void WarpedProfile::check_regularity() const {
  if (std::abs(f_(kPoleProbe) - kPoleProbe) > kPoleTol || std::abs(df_(kPoleProbe) - 1.0) > kPoleTol)
    throw InvalidInput("profile violates pole regularity f(0)=0, f'(0)=1");
  for (int i = 1; i <= kCurvatureSamples; ++i) {
    if (!(f_(R_ * i / kCurvatureSamples) > 0.0)) throw InvalidInput("profile: f must be > 0 on (0, R]");
  }
}

std::string_view WarpedProfile::kind_name() const {
  switch (kind_) {
    case Kind::flat: return "flat";
    case Kind::spherical: return "spherical";
    case Kind::hyperbolic: return "hyperbolic";
    case Kind::custom: return "custom";
  }
  return "custom";
}

double WarpedProfile::sec_radial(double r) const { return -ddf(r) / f(r); }

double WarpedProfile::sec_tangential(double r) const {
  // (1 - f'^2)/f^2 cancels badly near the pole; the space forms have it in closed form.
  switch (kind_) {
    case Kind::flat: return 0.0;
    case Kind::spherical: return c_;
    case Kind::hyperbolic: return -c_;
    case Kind::custom: break;
  }
  const double fr = f(r);
  const double d = df(r);
  return (1.0 - d * d) / (fr * fr);
}

double WarpedProfile::ric_radial(double r) const { return n_ * sec_radial(r); }

double WarpedProfile::ric_tangential(double r) const {
  return sec_radial(r) + (n_ - 1) * sec_tangential(r);
}

WarpedProfile WarpedProfile::scaled(double s) const {
  if (!(s > 0.0)) throw InvalidInput("profile scale must be > 0");
  switch (kind_) {
    case Kind::flat: return flat(n_, s * R_);
    case Kind::spherical: return spherical(n_, c_ / (s * s), s * R_);
    case Kind::hyperbolic: return hyperbolic(n_, c_ / (s * s), s * R_);
    case Kind::custom: break;
  }
  return custom(
      n_, s * R_, [f = f_, s](double r) { return s * f(r / s); },
      [df = df_, s](double r) { return df(r / s); }, [ddf = ddf_, s](double r) { return ddf(r / s) / s; });
}

GeometricData curvature_data(const WarpedProfile& p, double collar_r) {
  const double R = p.R();
  if (!(collar_r > 0.0) || collar_r > R) throw InvalidInput("curvature_data: need 0 < collar_r <= R");
  const double pole = kPoleOffset * R;
  const double lo = std::max(R - collar_r, pole);

  auto ric_min = [&](double a, double b) {
    const Extremes rr = sample_extremes([&](double r) { return p.ric_radial(r); }, a, b);
    const Extremes rt = sample_extremes([&](double r) { return p.ric_tangential(r); }, a, b);
    return std::pair{std::min(rr.min, rt.min), std::max(rr.max, rt.max)};
  };
  const auto [ric_glob_min, ric_glob_max] = ric_min(pole, R);
  (void)ric_glob_max;
  const auto [ric_col_min, ric_col_max] = ric_min(lo, R);

  Extremes sec = sample_extremes([&](double r) { return p.sec_radial(r); }, lo, R);
  if (p.n() >= 2) {
    const Extremes st = sample_extremes([&](double r) { return p.sec_tangential(r); }, lo, R);
    sec.min = std::min(sec.min, st.min);
    sec.max = std::max(sec.max, st.max);
  }

  GeometricData g;
  g.n = p.n();
  g.ric_lower_global = ric_glob_min;
  g.ric_lower_collar = std::max(0.0, ric_col_min);
  g.ric_upper_collar = std::max(0.0, ric_col_max);
  g.sec_upper_collar = std::max(0.0, sec.max);
  g.sec_lower_collar = std::min(0.0, sec.min);
  const double k = p.df(R) / p.f(R);
  g.kappa_lower = k;
  g.kappa_upper = k;
  g.mean_lower = p.n() * k;
  g.mean_upper = p.n() * k;
  g.rolling_radius = R;
  g.collar_radius = collar_r;
  return g;
}

GeometricData curvature_data(const WarpedProfile& p) { return curvature_data(p, p.R()); }

double parallel_mean_curvature_exact(const WarpedProfile& p, double delta) {
  if (!(delta > 0.0 && delta < p.R())) throw DomainError("parallel mean curvature: delta outside (0, R)");
  const double r = p.R() - delta;
  return p.n() * p.df(r) / p.f(r);
}

}  // namespace steklov
