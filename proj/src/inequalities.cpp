#include "steklov/inequalities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

namespace steklov {

namespace odeint = boost::numeric::odeint;
using boost::math::quadrature::gauss_kronrod;

namespace {

constexpr int kQuadMaxPanels = 4096;
constexpr double kGeodesicTol = 1e-14;
constexpr double kFdStepFraction = 2e-3;

// Composite GK15 on uniform panels, doubled until each integral's error
// estimate is below tol times the largest L1 norm among the integrands. The
// shared floor matters when an integrand vanishes identically (the Hessian
// term on a flat ball), where a purely relative criterion chases round-off.
template <std::size_t N, class Fn>
std::array<double, N> integrate_jointly(const std::array<Fn, N>& fns, double a, double b, double tol) {
  std::array<double, N> val{};
  for (int panels = 16; panels <= kQuadMaxPanels; panels *= 2) {
    std::array<double, N> err{};
    std::array<double, N> l1{};
    val.fill(0.0);
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
      const double lo = a + k * h;
      const double hi = k + 1 == panels ? b : lo + h;
      for (std::size_t i = 0; i < N; ++i) {
        double e = 0.0;
        double l = 0.0;
        val[i] += gauss_kronrod<double, 15>::integrate(fns[i], lo, hi, 0, 0.0, &e, &l);
        err[i] += e;
        l1[i] += l;
      }
    }
    const double scale = *std::max_element(l1.begin(), l1.end());
    bool done = true;
    for (std::size_t i = 0; i < N; ++i) done = done && err[i] <= tol * std::max(scale, l1[i]);
    if (done) return val;
  }
  throw ConvergenceError("mode integrals did not converge");
}

double largest_abs(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

// Point of the warped product: radius and unit vector on S^n in R^{n+1}.
struct WarpedPoint {
  double r;
  std::vector<double> x;
};

// Geodesic flow in (r, x) coordinates with x constrained to the unit sphere:
//   r'' = f f' |x'|^2,   x'' = -|x'|^2 x - 2 (f'/f) r' x'.
WarpedPoint exp_map(const WarpedProfile& p, const WarpedPoint& base,
                    const std::vector<std::vector<double>>& tangent_frame, const std::vector<double>& v) {
  const std::size_t m = base.x.size();
  std::vector<double> y(2 * (m + 1), 0.0);
  y[0] = base.r;
  for (std::size_t i = 0; i < m; ++i) y[1 + i] = base.x[i];
  const double fr = p.f(base.r);
  y[m + 1] = v[0];
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    for (std::size_t i = 0; i < m; ++i) y[m + 2 + i] += v[k + 1] * tangent_frame[k][i] / fr;

  auto rhs = [&p, m](const std::vector<double>& s, std::vector<double>& ds, double) {
    const double r = s[0];
    const double f = p.f(r);
    const double df = p.df(r);
    double speed = 0.0;
    for (std::size_t i = 0; i < m; ++i) speed += s[m + 2 + i] * s[m + 2 + i];
    ds[0] = s[m + 1];
    for (std::size_t i = 0; i < m; ++i) ds[1 + i] = s[m + 2 + i];
    ds[m + 1] = f * df * speed;
    for (std::size_t i = 0; i < m; ++i)
      ds[m + 2 + i] = -speed * s[1 + i] - 2.0 * (df / f) * s[m + 1] * s[m + 2 + i];
  };
  odeint::integrate_adaptive(
      odeint::make_controlled<odeint::runge_kutta_dopri5<std::vector<double>>>(kGeodesicTol, kGeodesicTol),
      rhs, y, 0.0, 1.0, 0.05);
  WarpedPoint out{y[0], std::vector<double>(y.begin() + 1, y.begin() + 1 + m)};
  double norm = 0.0;
  for (double c : out.x) norm += c * c;
  norm = std::sqrt(norm);
  for (double& c : out.x) c /= norm;
  return out;
}

// Orthonormal basis of the tangent space of S^n at x (Gram-Schmidt on the standard basis).
std::vector<std::vector<double>> sphere_frame(const std::vector<double>& x) {
  const std::size_t m = x.size();
  std::vector<std::vector<double>> basis{x};
  for (std::size_t e = 0; e < m && basis.size() < m; ++e) {
    std::vector<double> v(m, 0.0);
    v[e] = 1.0;
    for (const auto& b : basis) {
      double d = 0.0;
      for (std::size_t i = 0; i < m; ++i) d += v[i] * b[i];
      for (std::size_t i = 0; i < m; ++i) v[i] -= d * b[i];
    }
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (double& c : v) c /= norm;
    basis.push_back(v);
  }
  basis.erase(basis.begin());
  return basis;
}

struct TestRadial {
  double R;
  [[nodiscard]] double phi(double r) const { return r + 0.4 * r * r / R + 0.1 * r * r * r / (R * R); }
  [[nodiscard]] double dphi(double r) const { return 1.0 + 0.8 * r / R + 0.3 * r * r / (R * R); }
  [[nodiscard]] double ddphi(double r) const { return 0.8 / R + 0.6 * r / (R * R); }
};

// Frobenius norm squared of the Hessian of u(exp_p(v)) at v = 0, by central
// differences at step h and h/2 combined by Richardson extrapolation.
double fd_hessian_sq(const WarpedProfile& p, const WarpedPoint& base, const TestRadial& test, double h) {
  const auto frame = sphere_frame(base.x);
  const std::size_t dim = frame.size() + 1;
  auto U = [&](const std::vector<double>& v) {
    const WarpedPoint q = exp_map(p, base, frame, v);
    return test.phi(q.r) * q.x[0];
  };
  const double u0 = test.phi(base.r) * base.x[0];
  auto hessian = [&](double step) {
    std::vector<double> H(dim * dim);
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::fill(v.begin(), v.end(), 0.0);
      v[i] = step;
      const double up = U(v);
      v[i] = -step;
      const double um = U(v);
      H[i * dim + i] = (up - 2.0 * u0 + um) / (step * step);
      for (std::size_t j = i + 1; j < dim; ++j) {
        double acc = 0.0;
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            std::fill(v.begin(), v.end(), 0.0);
            v[i] = si * step;
            v[j] = sj * step;
            acc += si * sj * U(v);
          }
        H[i * dim + j] = H[j * dim + i] = acc / (4.0 * step * step);
      }
    }
    return H;
  };
  const auto H1 = hessian(h);
  const auto H2 = hessian(0.5 * h);
  double sq = 0.0;
  for (std::size_t k = 0; k < H1.size(); ++k) {
    const double e = (4.0 * H2[k] - H1[k]) / 3.0;
    sq += e * e;
  }
  return sq;
}

}  // namespace

double warped_hessian_sq(const WarpedProfile& p, double r, double phi, double dphi, double ddphi, double Y,
                         double grad_Y_sq) {
  const double f = p.f(r);
  const double k = p.df(r) / f;
  const double mixed = dphi - k * phi;            // radial-tangential block
  const double tangential = k * dphi - phi / (f * f);  // tangential block, uses Hess_S Y = -Y g_S
  return ddphi * ddphi * Y * Y + 2.0 * mixed * mixed * grad_Y_sq / (f * f) +
         p.n() * tangential * tangential * Y * Y;
}

ModeIntegrals mode_integrals(const RadialSolution& mode, double width, double quad_tol) {
  const WarpedProfile& p = mode.profile();
  if (mode.ell() != 1) throw InvalidInput("mode_integrals: only the l = 1 mode is supported");
  const double R = p.R();
  if (!(width > 0.0) || width > R * (1.0 + 1e-12)) throw InvalidInput("mode_integrals: need 0 < width <= R");
  const double lo = std::max(0.0, R - width);
  const int n = p.n();

  // Angular factors: int Y^2 = 1, int |grad_S Y|^2 = n.
  auto hess = [&](double r) {
    const auto v = mode(r);
    const double f = p.f(r);
    const double k = p.df(r) / f;
    const double mixed = v.dphi - k * v.phi;
    const double tangential = k * v.dphi - v.phi / (f * f);
    return (v.ddphi * v.ddphi + 2.0 * n * mixed * mixed / (f * f) + n * tangential * tangential) *
           std::pow(f, n);
  };
  auto grad = [&](double r) {
    const auto v = mode(r);
    const double f = p.f(r);
    return (v.dphi * v.dphi + n * v.phi * v.phi / (f * f)) * std::pow(f, n);
  };
  auto ricci = [&](double r) {
    const auto v = mode(r);
    const double f = p.f(r);
    return (p.ric_radial(r) * v.dphi * v.dphi + p.ric_tangential(r) * n * v.phi * v.phi / (f * f)) *
           std::pow(f, n);
  };

  using Integrand = std::function<double(double)>;
  const auto vals = integrate_jointly<3>(std::array<Integrand, 3>{hess, grad, ricci}, lo, R, quad_tol);
  ModeIntegrals out;
  out.hessian_sq = vals[0];
  out.gradient_sq = vals[1];
  out.ricci_gradient = vals[2];
  const double fR = p.f(R);
  out.boundary_tangential_sq = n * std::pow(fR, n - 2);
  out.boundary_normal_sq = mode.sigma() * mode.sigma() * std::pow(fR, n);
  return out;
}

double validate_hessian_reduction(const WarpedProfile& p, int points, std::uint64_t seed) {
  const double R = p.R();
  const TestRadial test{R};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.3 * R, 0.9 * R);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    WarpedPoint pt{radius(rng), std::vector<double>(p.n() + 1)};
    double norm = 0.0;
    for (double& c : pt.x) {
      c = gauss(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    for (double& c : pt.x) c /= norm;

    const double r = pt.r;
    const double Y = pt.x[0];
    const double grad_Y_sq = 1.0 - Y * Y;
    const double reduced =
        warped_hessian_sq(p, r, test.phi(r), test.dphi(r), test.ddphi(r), Y, grad_Y_sq);
    const double fd = fd_hessian_sq(p, pt, test, kFdStepFraction * R);
    // Scale of second derivatives of u, so near-zero Hessians are not divided by ~0.
    const double f = p.f(r);
    const double scale = (test.dphi(r) * test.dphi(r) * Y * Y + test.phi(r) * test.phi(r) * grad_Y_sq / (f * f)) /
                         (R * R);
    worst = std::max(worst, std::abs(fd - reduced) / std::max(reduced, scale));
  }
  return worst;
}

ReillyCheck reilly_inequality_check(const WarpedProfile& p, double a1, double a2, double a3, double collar_r) {
  if (!(collar_r > 0.0) || collar_r > p.R()) throw InvalidInput("reilly check: need 0 < collar_r <= R");
  ReillyCheck out;
  out.hessian_validation_error = validate_hessian_reduction(p);
  if (!(out.hessian_validation_error <= kInequalityTol)) {
    std::ostringstream os;
    os << "Hessian reduction failed finite-difference validation (relative error "
       << out.hessian_validation_error << ")";
    throw OracleError(os.str());
  }
  const RadialSolution mode(p, 1);
  const double sigma = mode.sigma();
  out.sigma1 = sigma;
  const ModeIntegrals collar = mode_integrals(mode, collar_r);
  out.hessian_term = collar.hessian_sq;
  out.gradient_term = (a1 + a2 * sigma) * collar.gradient_sq;
  out.boundary_term = (a3 - 2.0 * sigma) * collar.boundary_tangential_sq;
  out.rhs = out.hessian_term + out.gradient_term + out.boundary_term;
  out.residual = out.rhs / largest_abs({out.hessian_term, out.gradient_term, out.boundary_term});
  out.holds = out.residual <= kInequalityTol;

  // Reilly's identity for the harmonic u on all of M (Laplacian term vanishes):
  // -int |Hess u|^2 = int Ric(grad u, grad u) + int_Sigma H u_nu^2
  //                   - 2 int_Sigma <grad^T u, grad^T u_nu> + int_Sigma A(grad^T u, grad^T u)
  const ModeIntegrals full = collar_r == p.R() ? collar : mode_integrals(mode, p.R());
  const double k = p.df(p.R()) / p.f(p.R());
  const double H = p.n() * k;
  const double B = full.boundary_tangential_sq;
  const double lhs = -full.hessian_sq;
  const double rhs = full.ricci_gradient + H * full.boundary_normal_sq - 2.0 * sigma * B + k * B;
  out.identity_residual = std::abs(lhs - rhs) / largest_abs({full.hessian_sq, full.ricci_gradient,
                                                             H * full.boundary_normal_sq, 2.0 * sigma * B, k * B});
  return out;
}

ReillyCheck reilly_inequality_check(const WarpedProfile& p, double a1, double a2, double a3) {
  return reilly_inequality_check(p, a1, a2, a3, p.R());
}

CollarCheck collar_inequality_check(const WarpedProfile& p, double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw InvalidInput("collar check: epsilon must be > 0");
  const GeometricData g = curvature_data(p);
  if (!(g.kappa_upper > 0.0)) throw InapplicableError("collar check: boundary must be strictly convex");
  const double window = delta_sup(g.collar_radius, g.beta(), g.kappa_upper);
  if (!(delta > 0.0 && delta < window)) throw DomainError("collar check: delta outside admissible window");
  const RadialSolution mode(p, 1);
  const ModeIntegrals I = mode_integrals(mode, delta);
  CollarCheck out;
  out.kernel_E = kernel_E(delta, g.n, g.beta(), g.kappa_upper);
  out.boundary_term = epsilon * I.boundary_tangential_sq;
  out.hessian_term = I.hessian_sq;
  out.gradient_term = epsilon * (epsilon + out.kernel_E) * I.gradient_sq;
  out.residual = (out.boundary_term - out.hessian_term - out.gradient_term) /
                 largest_abs({out.boundary_term, out.hessian_term, out.gradient_term});
  out.holds = out.residual <= kInequalityTol;
  return out;
}

}  // namespace steklov
