#include "steklov/bounds.hpp"

#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

struct TheoremName {
  Theorem t;
  std::string_view name;
};

constexpr TheoremName kNames[] = {
    {Theorem::ThmA, "ThmA"},
    {Theorem::ThmE, "ThmE"},
    {Theorem::ThmF, "ThmF"},
    {Theorem::ThmC, "ThmC"},
    {Theorem::CorB, "CorB"},
    {Theorem::EscobarSurface, "EscobarSurface"},
    {Theorem::EscobarHigher, "EscobarHigher"},
    {Theorem::SpectralGap, "SpectralGap"},
};

BoundReport make_report(Theorem t) {
  BoundReport r;
  r.theorem = t;
  return r;
}

WindowMinimum choose_delta(const ComparisonKernel& kernel, double window, const BoundOptions& opts) {
  if (opts.delta) {
    const double d = *opts.delta;
    if (!(d > 0.0 && d < window)) {
      std::ostringstream os;
      os << "delta=" << d << " outside admissible window (0, " << window << ")";
      throw DomainError(os.str());
    }
    return {d, kernel(d), false, true};
  }
  return optimize_delta(kernel, window, opts.delta_tol);
}

// Shared tail of ThmA / ThmC / CorB: kappa/2 + eps/2 with eps the fixed point
// of the iteration driven by the kernel value at delta*.
void finish_iterated(BoundReport& rep, const GeometricData& g, double kernel_value,
                     const BoundOptions& opts) {
  const double kappa = g.kappa_lower;
  const double eps = fixed_point_epsilon(kernel_value, g.n, kappa, g.a_sq());
  rep.epsilon_trace = iterate_epsilon(kernel_value, g.n, kappa, g.a_sq(), opts.iter_tol, opts.max_iter);
  rep.bound = 0.5 * kappa + 0.5 * eps;
  rep.applicable = true;
}

void gate_common(BoundReport& rep, const GeometricData& g) {
  if (g.ric_lower_global < 0.0) rep.reasons.emplace_back("requires Ric >= 0 in M");
}

BoundReport sectional_collar_bound(Theorem which, const GeometricData& g, double collar,
                                   const BoundOptions& opts) {
  BoundReport rep = make_report(which);
  gate_common(rep, g);
  if (!(g.kappa_lower > 0.0)) rep.reasons.emplace_back("requires 0<kappa<=kappa_i");
  if (!(g.kappa_upper > 0.0)) rep.reasons.emplace_back("requires kappa_i<=K with K>0");
  if (!rep.reasons.empty()) return rep;

  const auto kernel = ComparisonKernel::E(g.n, g.beta(), g.kappa_upper);
  rep.kernels.window = delta_sup(collar, g.beta(), g.kappa_upper);
  const WindowMinimum m = choose_delta(kernel, rep.kernels.window, opts);
  rep.delta_star = m.delta;
  rep.kernels.E = m.value;
  rep.kernels.F = 2.0 * m.value - g.n * g.kappa_lower;
  finish_iterated(rep, g, m.value, opts);
  return rep;
}

// Gates shared by ThmE and ThmF. Returns the kernel window when hypotheses hold.
void gate_positive_ricci(BoundReport& rep, const GeometricData& g) {
  gate_common(rep, g);
  if (!(g.a_sq() > 0.0)) rep.reasons.emplace_back("requires Ric >= a^2 > 0");
  if (g.mean_lower < 0.0) rep.reasons.emplace_back("requires H >= 0");
  if (!(g.kappa_upper > 0.0)) rep.reasons.emplace_back("requires kappa_i<=K with K>0");
  if (rep.reasons.empty() && g.beta() == 0.0)
    rep.notes.emplace_back("outside stated hypotheses: beta = 0 (kernel still defined)");
}

// Both ThmE and ThmF bounds decrease in E on the admissible set, and the
// admissibility condition kappa > -eps1(delta) is easiest where E is smallest,
// so the best admissible delta is the minimizer of E.
bool admissible_delta(BoundReport& rep, const GeometricData& g, const BoundOptions& opts,
                      WindowMinimum& m, double& eps1) {
  const auto kernel = ComparisonKernel::E(g.n, g.beta(), g.kappa_upper);
  rep.kernels.window = delta_sup(g.collar_radius, g.beta(), g.kappa_upper);
  m = choose_delta(kernel, rep.kernels.window, opts);
  eps1 = collar_epsilon(m.value, g.a_sq());
  if (!(g.kappa_lower > -eps1)) {
    rep.reasons.emplace_back(opts.delta ? "requires kappa > -eps1(delta) at the given delta"
                                        : "requires kappa > -eps1(delta) for some admissible delta");
    return false;
  }
  rep.delta_star = m.delta;
  rep.kernels.E = m.value;
  return true;
}

}  // namespace

std::string_view to_string(Theorem t) {
  for (const auto& n : kNames)
    if (n.t == t) return n.name;
  return "unknown";
}

std::optional<Theorem> theorem_from_string(std::string_view s) {
  for (const auto& n : kNames)
    if (n.name == s) return n.t;
  if (s == "A") return Theorem::ThmA;
  if (s == "E") return Theorem::ThmE;
  if (s == "F") return Theorem::ThmF;
  if (s == "C") return Theorem::ThmC;
  if (s == "corB") return Theorem::CorB;
  if (s == "gap") return Theorem::SpectralGap;
  return std::nullopt;
}

BoundReport theorem_A_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  return sectional_collar_bound(Theorem::ThmA, g, g.collar_radius, opts);
}

BoundReport theorem_E_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  BoundReport rep = make_report(Theorem::ThmE);
  gate_positive_ricci(rep, g);
  if (!rep.reasons.empty()) return rep;
  WindowMinimum m;
  double eps1 = 0.0;
  if (!admissible_delta(rep, g, opts, m, eps1)) return rep;
  rep.bound = 0.5 * (g.kappa_lower + eps1);
  rep.applicable = true;
  return rep;
}

BoundReport theorem_F_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  BoundReport rep = make_report(Theorem::ThmF);
  gate_positive_ricci(rep, g);
  if (!(g.mean_lower > 0.0)) {
    rep.reasons.emplace_back("requires H >= h > 0");
    rep.notes.emplace_back("defers to ThmE");
  }
  if (!rep.reasons.empty()) return rep;
  WindowMinimum m;
  double eps1 = 0.0;
  if (!admissible_delta(rep, g, opts, m, eps1)) return rep;
  const double h = g.mean_lower;
  rep.kernels.T = 2.0 * m.value - h;
  const double eps = fixed_point_epsilon_mean_convex(m.value, h, g.kappa_lower, g.a_sq());
  rep.epsilon_trace =
      iterate_epsilon_mean_convex(m.value, h, g.kappa_lower, g.a_sq(), opts.iter_tol, opts.max_iter);
  rep.bound = 0.5 * g.kappa_lower + 0.5 * eps;
  rep.applicable = true;
  return rep;
}

BoundReport theorem_C_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  BoundReport rep = make_report(Theorem::ThmC);
  gate_common(rep, g);
  if (!(g.kappa_lower > 0.0)) rep.reasons.emplace_back("requires 0<kappa<=kappa_i");
  if (-g.sec_lower_collar > g.kappa_lower * g.kappa_lower || !(g.kappa_lower > 0.0))
    rep.reasons.emplace_back("requires 0<=alpha<=kappa");
  if (!(g.mean_upper > 0.0)) rep.reasons.emplace_back("requires H<=H_max with H_max>0");
  if (!rep.reasons.empty()) return rep;

  const auto kernel = ComparisonKernel::P(g.b(), g.mean_upper);
  rep.kernels.window = delta_sup(g.collar_radius, g.b(), g.mean_upper);
  const WindowMinimum m = choose_delta(kernel, rep.kernels.window, opts);
  rep.delta_star = m.delta;
  rep.kernels.P = m.value;
  rep.kernels.Q = 2.0 * m.value - g.n * g.kappa_lower;
  finish_iterated(rep, g, m.value, opts);
  return rep;
}

double corollary_B_rolling_lower(double kappa, double alpha, double beta, double K) {
  if (!(kappa > 0.0)) throw InvalidInput("corollary B: kappa must be > 0");
  if (!(alpha > 0.0)) throw InvalidInput("corollary B: alpha = 0 is not supported");
  const double reach = kappa < alpha ? std::atanh(kappa / alpha) / alpha : kInfinity;
  return delta_sup(reach, beta, K);
}

BoundReport corollary_B_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  BoundReport rep = make_report(Theorem::CorB);
  gate_common(rep, g);
  if (!(g.kappa_lower > 0.0)) rep.reasons.emplace_back("requires 0<kappa<=kappa_i");
  if (!(g.kappa_upper > 0.0)) rep.reasons.emplace_back("requires kappa_i<=K with K>0");
  if (!(g.alpha() > 0.0)) rep.reasons.emplace_back("requires Sec >= -alpha^2 with alpha > 0");
  if (!rep.reasons.empty()) return rep;
  const double reach = corollary_B_rolling_lower(g.kappa_lower, g.alpha(), g.beta(), g.kappa_upper);
  rep.notes.emplace_back("rolling radius replaced by its lower bound " + std::to_string(reach));
  BoundReport inner = sectional_collar_bound(Theorem::CorB, g, std::min(g.collar_radius, reach), opts);
  inner.notes = rep.notes;
  return inner;
}

std::vector<BoundReport> escobar_baselines(const GeometricData& g) {
  validate(g);
  BoundReport surface = make_report(Theorem::EscobarSurface);
  BoundReport higher = make_report(Theorem::EscobarHigher);
  if (g.n != 1) surface.reasons.emplace_back("requires n = 1");
  if (g.n < 2) higher.reasons.emplace_back("requires n >= 2");
  if (g.ric_lower_global < 0.0) {
    surface.reasons.emplace_back("requires Gaussian curvature >= 0");
    higher.reasons.emplace_back("requires Ric >= 0 in M");
  }
  if (!(g.kappa_lower > 0.0)) {
    surface.reasons.emplace_back("requires 0<kappa<=kappa_i");
    higher.reasons.emplace_back("requires 0<kappa<=kappa_i");
  }
  if (surface.reasons.empty()) {
    surface.applicable = true;
    surface.bound = g.kappa_lower;
  }
  higher.strict = true;
  if (higher.reasons.empty()) {
    higher.applicable = true;
    higher.bound = 0.5 * g.kappa_lower;
  }
  return {surface, higher};
}

std::optional<GapInterval> spectral_gap(int n, double a_sq_neg, double kappa) {
  if (n < 1) throw InvalidInput("spectral_gap: n must be >= 1");
  if (!(a_sq_neg > 0.0) || !(kappa > 0.0)) return std::nullopt;
  if (!(kappa > std::sqrt(2.0 * a_sq_neg / n))) return std::nullopt;
  return GapInterval{a_sq_neg / (n * kappa), 0.5 * kappa};
}

BoundReport spectral_gap_report(const GeometricData& g) {
  validate(g);
  BoundReport rep = make_report(Theorem::SpectralGap);
  if (!(g.ric_lower_global < 0.0)) rep.reasons.emplace_back("requires Ric >= -a^2 with a > 0");
  if (!(g.kappa_lower > 0.0)) rep.reasons.emplace_back("requires 0<kappa<=kappa_i");
  if (!rep.reasons.empty()) return rep;
  rep.gap = spectral_gap(g.n, -g.ric_lower_global, g.kappa_lower);
  if (!rep.gap) {
    rep.reasons.emplace_back("requires kappa > sqrt(2a^2/n)");
    return rep;
  }
  rep.applicable = true;
  rep.strict = true;
  return rep;
}

BoundReport bound_for(Theorem t, const GeometricData& g, const BoundOptions& opts) {
  switch (t) {
    case Theorem::ThmA: return theorem_A_bound(g, opts);
    case Theorem::ThmE: return theorem_E_bound(g, opts);
    case Theorem::ThmF: return theorem_F_bound(g, opts);
    case Theorem::ThmC: return theorem_C_bound(g, opts);
    case Theorem::CorB: return corollary_B_bound(g, opts);
    case Theorem::EscobarSurface: return escobar_baselines(g)[0];
    case Theorem::EscobarHigher: return escobar_baselines(g)[1];
    case Theorem::SpectralGap: return spectral_gap_report(g);
  }
  throw InvalidInput("unknown theorem");
}

BoundReport best_bound(const GeometricData& g, const BoundOptions& opts) {
  validate(g);
  std::vector<BoundReport> subs;
  std::optional<DomainError> window_error;
  bool any_delta_theorem = false;
  for (Theorem t : {Theorem::ThmA, Theorem::ThmE, Theorem::ThmF, Theorem::ThmC, Theorem::CorB}) {
    try {
      subs.push_back(bound_for(t, g, opts));
      any_delta_theorem = any_delta_theorem || subs.back().applicable;
    } catch (const DomainError& e) {
      if (!window_error) window_error = e;
      BoundReport r = make_report(t);
      r.reasons.emplace_back(e.what());
      subs.push_back(std::move(r));
    }
  }
  // A forced delta that no theorem accepts is an input error, not a gate.
  if (opts.delta && window_error && !any_delta_theorem) throw *window_error;
  for (auto& r : escobar_baselines(g)) subs.push_back(std::move(r));
  if (g.ric_lower_global < 0.0) subs.push_back(spectral_gap_report(g));

  const BoundReport* best = nullptr;
  for (const auto& r : subs) {
    if (!r.applicable || r.theorem == Theorem::SpectralGap) continue;
    if (best == nullptr || r.bound > best->bound) best = &r;
  }
  BoundReport out;
  if (best != nullptr) {
    out = *best;
  } else {
    out.theorem = Theorem::ThmA;
    for (const auto& r : subs)
      for (const auto& why : r.reasons) out.reasons.push_back(std::string(to_string(r.theorem)) + ": " + why);
  }
  out.sub_reports = std::move(subs);
  return out;
}

}  // namespace steklov
