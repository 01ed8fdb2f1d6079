#include "steklov/radial_solution.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov {

namespace odeint = boost::numeric::odeint;

namespace {
constexpr double kMaxLogDerivative = 1e12;
}

RadialSolution::RadialSolution(const WarpedProfile& profile, int ell, const RadialOptions& opts)
    : profile_(profile), ell_(ell), lambda_(static_cast<double>(ell) * (ell + profile.n() - 1)), opts_(opts) {
  if (ell < 0) throw InvalidInput("radial solution: ell must be >= 0");
  if (!(opts.start_fraction > 0.0 && opts.start_fraction < 1.0))
    throw InvalidInput("radial solution: start_fraction must lie in (0, 1)");
  const double R = profile_.R();
  const double r0 = opts.start_fraction * R;
  s0_ = std::log(r0);
  const double sR = std::log(R);

  State x{static_cast<double>(ell), ell * std::log(r0)};
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(opts.ode_tol, opts.ode_tol);
  auto sys = [this](const State& y, State& dy, double s) { rhs(y, dy, s); };
  double s = s0_;
  double ds = 1e-3;
  ck_s_.push_back(s);
  ck_x_.push_back(x);
  int failures = 0;
  while (s < sR) {
    if (s + ds > sR) ds = sR - s;
    if (stepper.try_step(sys, x, s, ds) == odeint::fail) {
      if (++failures > 10000) throw OracleError("radial solution: step size collapsed");
      continue;
    }
    if (!std::isfinite(x[0]) || std::abs(x[0]) > kMaxLogDerivative) {
      std::ostringstream os;
      os << "radial solution: log-derivative blow-up at r=" << std::exp(s) << " (ell=" << ell << ")";
      throw OracleError(os.str());
    }
    ck_s_.push_back(s);
    ck_x_.push_back(x);
  }
  ck_s_.back() = sR;
  psi_R_ = x[1];
  sigma_ = x[0] / R;
}

void RadialSolution::rhs(const State& x, State& dx, double s) const {
  const double r = std::exp(s);
  const double f = profile_.f(r);
  const double q = r / f;
  const double W = x[0];
  dx[0] = W + lambda_ * q * q - profile_.n() * (profile_.df(r) * q) * W - W * W;
  dx[1] = W;
}

RadialSolution::State RadialSolution::state_at(double s) const {
  const auto it = std::upper_bound(ck_s_.begin(), ck_s_.end(), s);
  const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - ck_s_.begin()) - 1));
  State x = ck_x_[k];
  const double start = ck_s_[k];
  if (s > start) {
    auto sys = [this](const State& y, State& dy, double t) { rhs(y, dy, t); };
    odeint::integrate_adaptive(
        odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(opts_.ode_tol, opts_.ode_tol), sys, x,
        start, s, s - start);
  }
  return x;
}

RadialSolution::Value RadialSolution::operator()(double r) const {
  const double R = profile_.R();
  if (!(r > 0.0) || r > R * (1.0 + 1e-12)) throw DomainError("radial solution evaluated outside (0, R]");
  r = std::min(r, R);
  const int n = profile_.n();
  double phi;
  double dphi;
  const double s = std::log(r);
  if (s <= s0_) {
    // Below the starting radius the pole asymptotics phi ~ r^l are used directly.
    const State x0 = ck_x_.front();
    phi = std::exp(x0[1] - psi_R_ + ell_ * (s - s0_));
    dphi = ell_ * phi / r;
  } else {
    const State x = state_at(s);
    phi = std::exp(x[1] - psi_R_);
    dphi = x[0] * phi / r;
  }
  const double f = profile_.f(r);
  const double ddphi = lambda_ * phi / (f * f) - n * profile_.df(r) / f * dphi;
  return {phi, dphi, ddphi};
}

}  // namespace steklov
