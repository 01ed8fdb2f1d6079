#include "steklov/riccati.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

namespace steklov {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void check_time(double t, double T) {
  if (!(t >= 0.0) || !(t < T)) {
    std::ostringstream os;
    os << "t=" << t << " outside maximal interval [0, " << T << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

RiccatiSolution RiccatiSolution::make(double c, double y0) {
  RiccatiSolution s{c, y0, kInfinity};
  if (c > 0.0) {
    // y = -s tan(s t + theta), tan(theta) = -y0 / s
    const double root = std::sqrt(c);
    s.maximal_time = (kHalfPi - std::atan(-y0 / root)) / root;
  } else if (c == 0.0) {
    if (y0 < 0.0) s.maximal_time = -1.0 / y0;
  } else {
    const double a = std::sqrt(-c);
    // Below the lower equilibrium -a the solution blows up: y = a coth(a t + theta), theta < 0.
    if (y0 < -a) s.maximal_time = std::atanh(-a / y0) / a;
  }
  return s;
}

double RiccatiSolution::operator()(double t) const {
  check_time(t, maximal_time);
  const double c = curvature_const;
  const double y0 = initial_value;
  if (c > 0.0) {
    const double s = std::sqrt(c);
    return -s * std::tan(s * t + std::atan(-y0 / s));
  }
  if (c == 0.0) return y0 / (1.0 + y0 * t);
  const double a = std::sqrt(-c);
  if (y0 == -a || y0 == a) return y0;
  // Linear-fractional form valid on both sides of the equilibria.
  const double th = std::tanh(a * t);
  return a * (y0 + a * th) / (a + y0 * th);
}

double phi_maximal_time(double beta, double K) { return delta_sup(kInfinity, beta, K); }

double phi_closed(double t, double beta, double K) {
  check_time(t, phi_maximal_time(beta, K));
  if (beta > 0.0) {
    const double tb = std::tan(beta * t);
    return -(beta * beta * tb + beta * K) / (beta - K * tb);
  }
  return -K / (1.0 - K * t);
}

double psi_maximal_time(double alpha, double kappa) {
  if (!(kappa > 0.0)) throw InvalidInput("psi: kappa must be > 0");
  if (!(alpha >= 0.0) || alpha > kappa) throw InvalidInput("psi: requires 0<=alpha<=kappa");
  if (alpha == 0.0) return 1.0 / kappa;
  if (alpha < kappa) return std::atanh(alpha / kappa) / alpha;
  return kInfinity;
}

double psi_closed(double t, double alpha, double kappa) {
  check_time(t, psi_maximal_time(alpha, kappa));
  if (alpha == 0.0) return -kappa / (1.0 - kappa * t);
  if (alpha < kappa) {
    const double th = std::tanh(alpha * t);
    return -(kappa * alpha - alpha * alpha * th) / (alpha - kappa * th);
  }
  return -kappa;
}

Trajectory integrate_riccati(double c, double y0, double t_end, const StepControl& control) {
  if (!(t_end > 0.0)) throw InvalidInput("integrate_riccati: t_end must be > 0");
  if (control.samples < 1) throw InvalidInput("integrate_riccati: samples must be >= 1");
  using State = std::array<double, 1>;
  auto rhs = [c](const State& y, State& dy, double) { dy[0] = -y[0] * y[0] - c; };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(control.abs_tol,
                                                                             control.rel_tol);
  Trajectory out;
  out.t.push_back(0.0);
  out.y.push_back(y0);
  State y{y0};
  double t = 0.0;
  double dt = std::min(1e-3, t_end / control.samples);
  for (int k = 1; k <= control.samples; ++k) {
    const double target = t_end * k / control.samples;
    while (t < target) {
      if (t + dt > target) dt = target - t;
      const double t_before = t;
      if (stepper.try_step(rhs, y, t, dt) == odeint::fail) {
        if (dt < 1e-15 * std::max(1.0, t)) {
          out.blew_up = true;
          out.effective_end = t_before;
          return out;
        }
        continue;
      }
      if (!std::isfinite(y[0]) || std::abs(y[0]) > kBlowUpThreshold) {
        out.blew_up = true;
        out.effective_end = t_before;
        return out;
      }
    }
    t = target;
    out.t.push_back(t);
    out.y.push_back(y[0]);
  }
  out.effective_end = t_end;
  return out;
}

double parallel_H_window(const GeometricData& g, ComparisonVariant variant) {
  if (variant == ComparisonVariant::sectional) return delta_sup(g.collar_radius, g.beta(), g.kappa_upper);
  return delta_sup(g.collar_radius, g.b(), g.mean_upper);
}

double parallel_H_upper(double delta, const GeometricData& g, ComparisonVariant variant) {
  if (variant == ComparisonVariant::ricci) {
    if (!(g.kappa_lower > 0.0) || g.alpha() > g.kappa_lower)
      throw InapplicableError("ricci comparison requires 0<=alpha<=kappa with kappa>0");
    if (!(g.mean_upper > 0.0)) throw InapplicableError("ricci comparison requires H_max > 0");
  } else if (!(g.kappa_upper > 0.0)) {
    throw InapplicableError("sectional comparison requires K > 0");
  }
  const double window = parallel_H_window(g, variant);
  if (!(delta > 0.0 && delta < window)) throw DomainError("parallel_H_upper: delta outside window");
  const auto kernel = variant == ComparisonVariant::sectional
                          ? ComparisonKernel::E(g.n, g.beta(), g.kappa_upper)
                          : ComparisonKernel::P(g.b(), g.mean_upper);
  return kernel.mean_curvature_bound(delta);
}

}  // namespace steklov
