#include "steklov/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/inequalities.hpp"
#include "steklov/kernels.hpp"
#include "steklov/oracle.hpp"
#include "steklov/riccati.hpp"

namespace steklov {

namespace {

using std::numbers::pi;

struct PendingCase {
  std::string key;
  std::function<CaseRecord()> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CaseRecord record(std::string key, Json inputs) {
  CaseRecord c;
  c.key = std::move(key);
  c.inputs = std::move(inputs);
  c.values = Json::object();
  return c;
}

std::vector<CaseRecord> execute(const std::vector<PendingCase>& pending, bool parallel) {
  std::vector<CaseRecord> out(pending.size());
  auto one = [&](std::size_t i) {
    try {
      out[i] = pending[i].run();
    } catch (const std::exception& e) {
      out[i] = record(pending[i].key, Json::object());
      out[i].pass = false;
      out[i].message = std::string("exception: ") + e.what();
    }
    out[i].key = pending[i].key;
  };
  const auto n = static_cast<long>(pending.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  }
  std::sort(out.begin(), out.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.key < b.key; });
  return out;
}

// ---------------------------------------------------------------- balls

void add_balls(std::vector<PendingCase>& cases) {
  const std::pair<double, const char*> radii[] = {{0.5, "0.5"}, {1.0, "1"}, {2.0, "2"}};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [R, Rname] : radii) {
      std::string key = "balls/n=" + std::to_string(n) + "/R=" + Rname;
      cases.push_back({key, [n, R = R, key] {
                         CaseRecord c = record(key, Json{{"kind", "flat"}, {"n", n}, {"R", R}});
                         const auto p = WarpedProfile::flat(n, R);
                         const auto est = steklov_spectrum(p);
                         double mode_err = 0.0;
                         for (const auto& m : est.modes)
                           if (m.ell >= 1 && m.ell <= 3) mode_err = std::max(mode_err, std::abs(m.sigma_ell - m.ell / R));
                         const auto best = best_bound(curvature_data(p));
                         const double bound = best.applicable ? best.bound : 0.0;
                         c.margin = est.sigma1 - bound;
                         c.values = Json{{"sigma1", est.sigma1},
                                         {"mode_error", mode_err},
                                         {"best_theorem", std::string(to_string(best.theorem))},
                                         {"best_bound", bound}};
                         for (const auto& s : best.sub_reports)
                           if (s.applicable && s.theorem != Theorem::SpectralGap)
                             c.values["bounds"][std::string(to_string(s.theorem))] = s.bound;
                         c.pass = mode_err <= 1e-8 && std::abs(est.sigma1 - 1.0 / R) <= 1e-8 && c.margin >= -kMarginSlack;
                         if (!c.pass) c.message = "oracle deviates from l/R or falls below a bound";
                         return c;
                       }});
    }
  }
}

// ---------------------------------------------------------------- caps

void add_caps(std::vector<PendingCase>& cases) {
  const std::pair<double, const char*> radii[] = {{pi / 6, "pi/6"}, {pi / 4, "pi/4"}, {pi / 3, "pi/3"}};
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [R, Rname] : radii) {
      std::string key = "caps/n=" + std::to_string(n) + "/R=" + Rname;
      cases.push_back({key, [n, R = R, key] {
                         CaseRecord c = record(key, Json{{"kind", "spherical"}, {"c", 1.0}, {"n", n}, {"R", R}});
                         const auto p = WarpedProfile::spherical(n, 1.0, R);
                         const auto est = steklov_spectrum(p);
                         const auto best = best_bound(curvature_data(p));
                         double top = 0.0;
                         std::optional<double> thmE;
                         std::optional<double> thmF;
                         for (const auto& s : best.sub_reports) {
                           if (!s.applicable || s.theorem == Theorem::SpectralGap) continue;
                           c.values["bounds"][std::string(to_string(s.theorem))] = s.bound;
                           top = std::max(top, s.bound);
                           if (s.theorem == Theorem::ThmE) thmE = s.bound;
                           if (s.theorem == Theorem::ThmF) thmF = s.bound;
                         }
                         c.values["sigma1"] = est.sigma1;
                         if (n == 1) c.values["sigma1_closed_form"] = 1.0 / std::sin(R);
                         c.margin = est.sigma1 - top;
                         const bool ordered = !(thmE && thmF) || *thmF >= *thmE;
                         c.values["thmF_ge_thmE"] = ordered;
                         c.pass = c.margin >= -kMarginSlack && ordered;
                         if (!c.pass) c.message = "a theorem bound exceeds the oracle or ThmF < ThmE";
                         return c;
                       }});
    }
  }
}

// ---------------------------------------------------------------- hyperbolic gap

void add_hyperbolic_gap(std::vector<PendingCase>& cases) {
  const std::pair<double, const char*> radii[] = {{0.3, "0.3"}, {0.5, "0.5"}, {0.8, "0.8"}, {1.2, "1.2"}};
  for (const auto& [R, Rname] : radii) {
    std::string key = std::string("hyperbolic_gap/n=2/R=") + Rname;
    cases.push_back({key, [R = R, key] {
                       CaseRecord c = record(key, Json{{"kind", "hyperbolic"}, {"c", 1.0}, {"n", 2}, {"R", R}});
                       const auto p = WarpedProfile::hyperbolic(2, 1.0, R);
                       const auto g = curvature_data(p);
                       const double a_sq = -g.ric_lower_global;
                       const double kappa = g.kappa_lower;
                       const auto gap = spectral_gap(2, a_sq, kappa);
                       // Independent expectation: kappa = coth R, a^2 = n c = 2, gate kappa^2 > 2.
                       const double coth = 1.0 / std::tanh(R);
                       const bool expect_gap = coth * coth > 2.0;
                       c.values = Json{{"a_sq", a_sq}, {"kappa", kappa}, {"gate", gap.has_value()}};
                       bool ok = gap.has_value() == expect_gap && std::abs(a_sq - 2.0) <= 1e-10 &&
                                 std::abs(kappa - coth) <= 1e-12;
                       OracleOptions o;
                       o.early_stop = false;
                       const auto est = steklov_spectrum(p, 10, o);
                       Json sig = Json::array();
                       for (const auto& m : est.modes) {
                         if (m.ell == 0) continue;
                         sig.push_back(m.sigma_ell);
                         if (gap && m.sigma_ell > gap->lower && m.sigma_ell < gap->upper) ok = false;
                       }
                       c.values["sigma"] = sig;
                       if (gap) c.values["gap"] = Json{{"lower", gap->lower}, {"upper", gap->upper}};
                       c.pass = ok;
                       if (!ok) c.message = "gate disagrees with closed form or an eigenvalue lies in the gap";
                       return c;
                     }});
  }
}

// ---------------------------------------------------------------- riccati

double max_deviation(const Trajectory& tr, const std::function<double(double)>& closed) {
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.t.size(); ++i) worst = std::max(worst, std::abs(tr.y[i] - closed(tr.t[i])));
  return worst;
}

void add_riccati(std::vector<PendingCase>& cases) {
  const double curv[] = {0.0, 0.5, 1.0, 2.0};
  const double init[] = {0.5, 1.0, 2.0};
  for (double beta : curv) {
    for (double K : init) {
      std::string key = "riccati/phi/beta=" + fmt(beta) + "/K=" + fmt(K);
      cases.push_back({key, [beta, K, key] {
                         CaseRecord c = record(key, Json{{"beta", beta}, {"K", K}});
                         const double T = phi_maximal_time(beta, K);
                         const auto tr = integrate_riccati(beta * beta, -K, 0.95 * T);
                         const double dev = max_deviation(tr, [&](double t) { return phi_closed(t, beta, K); });
                         const auto general = RiccatiSolution::make(beta * beta, -K);
                         const double route = max_deviation(tr, [&](double t) { return general(t); });
                         c.values = Json{{"maximal_time", T}, {"max_deviation", dev}, {"general_form_deviation", route}};
                         c.pass = !tr.blew_up && dev <= 1e-8 && route <= 1e-8 &&
                                  std::abs(general.maximal_time - T) <= 1e-14 * T;
                         return c;
                       }});
    }
  }
  for (double alpha : curv) {
    for (double kappa : init) {
      if (alpha > kappa) continue;
      std::string key = "riccati/psi/alpha=" + fmt(alpha) + "/kappa=" + fmt(kappa);
      cases.push_back({key, [alpha, kappa, key] {
                         CaseRecord c = record(key, Json{{"alpha", alpha}, {"kappa", kappa}});
                         const double T = psi_maximal_time(alpha, kappa);
                         const bool equilibrium = std::isinf(T);
                         const double t_end = equilibrium ? 10.0 : 0.95 * T;
                         const auto tr = integrate_riccati(-alpha * alpha, -kappa, t_end);
                         const double dev = max_deviation(tr, [&](double t) { return psi_closed(t, alpha, kappa); });
                         c.values = Json{{"t_end", t_end}, {"max_deviation", dev}, {"equilibrium", equilibrium}};
                         c.pass = !tr.blew_up && dev <= (equilibrium ? 1e-10 : 1e-8);
                         return c;
                       }});
    }
  }
  cases.push_back({"riccati/continuity", [] {
                     CaseRecord c = record("riccati/continuity", Json::object());
                     double worst_phi = 0.0;
                     double worst_psi = 0.0;
                     for (double t : {0.0, 0.1, 0.2, 0.3, 0.4}) {
                       const double flat_phi = phi_closed(t, 0.0, 2.0);
                       const double flat_psi = psi_closed(t, 0.0, 2.0);
                       worst_phi = std::max(worst_phi, std::abs(phi_closed(t, 1e-6, 2.0) - flat_phi) / std::abs(flat_phi));
                       worst_psi = std::max(worst_psi, std::abs(psi_closed(t, 1e-6, 2.0) - flat_psi) / std::abs(flat_psi));
                     }
                     c.values = Json{{"phi_rel_gap", worst_phi}, {"psi_rel_gap", worst_psi}};
                     c.pass = worst_phi <= 1e-9 && worst_psi <= 1e-9;
                     return c;
                   }});

  struct Model {
    const char* name;
    WarpedProfile (*make)(int);
  };
  const Model models[] = {
      {"flat/R=1", [](int n) { return WarpedProfile::flat(n, 1.0); }},
      {"cap/R=pi/4", [](int n) { return WarpedProfile::spherical(n, 1.0, pi / 4); }},
      {"cap/R=pi/3", [](int n) { return WarpedProfile::spherical(n, 1.0, pi / 3); }},
  };
  for (const auto& m : models) {
    for (int n = 1; n <= 3; ++n) {
      std::string key = std::string("riccati/sharpness/") + m.name + "/n=" + std::to_string(n);
      cases.push_back({key, [make = m.make, n, key] {
                         CaseRecord c = record(key, Json{{"n", n}});
                         const auto p = make(n);
                         const auto g = curvature_data(p);
                         const double window = parallel_H_window(g, ComparisonVariant::sectional);
                         const double ricci_window = parallel_H_window(g, ComparisonVariant::ricci);
                         double worst_gap = 0.0;
                         double worst_violation = 0.0;
                         double worst_ricci = 0.0;
                         int ricci_points = 0;
                         for (int i = 1; i <= 100; ++i) {
                           const double d = window * i / 101.0;
                           const double exact = parallel_mean_curvature_exact(p, d);
                           const double upper = parallel_H_upper(d, g, ComparisonVariant::sectional);
                           worst_gap = std::max(worst_gap, std::abs(upper - exact));
                           worst_violation = std::max(worst_violation, exact - upper);
                           if (d < ricci_window) {
                             ++ricci_points;
                             worst_ricci = std::max(worst_ricci, exact - parallel_H_upper(d, g, ComparisonVariant::ricci));
                           }
                         }
                         c.values = Json{{"max_abs_difference", worst_gap},
                                         {"max_violation", worst_violation},
                                         {"ricci_points", ricci_points},
                                         {"ricci_max_violation", worst_ricci}};
                         c.pass = worst_gap <= 1e-9 && worst_violation <= 1e-9 && worst_ricci <= 1e-9 && ricci_points > 0;
                         return c;
                       }});
    }
  }
}

// ---------------------------------------------------------------- reilly

void add_reilly(std::vector<PendingCase>& cases) {
  struct Model {
    std::string name;
    std::function<WarpedProfile()> make;
  };
  const std::vector<Model> models = {
      {"flat/n=1/R=1", [] { return WarpedProfile::flat(1, 1.0); }},
      {"flat/n=2/R=1", [] { return WarpedProfile::flat(2, 1.0); }},
      {"flat/n=3/R=1", [] { return WarpedProfile::flat(3, 1.0); }},
      {"cap/n=1/R=pi/4", [] { return WarpedProfile::spherical(1, 1.0, pi / 4); }},
      {"cap/n=2/R=pi/4", [] { return WarpedProfile::spherical(2, 1.0, pi / 4); }},
      {"cap/n=3/R=pi/3", [] { return WarpedProfile::spherical(3, 1.0, pi / 3); }},
  };
  for (const auto& m : models) {
    const std::string key = "reilly/lemma/" + m.name;
    cases.push_back({key, [m, key] {
                       CaseRecord c = record(key, Json{{"model", m.name}});
                       const auto p = m.make();
                       const auto g = curvature_data(p);
                       const auto chk = reilly_inequality_check(p, g.ric_lower_collar, g.mean_lower, g.kappa_lower);
                       const auto degenerate = reilly_inequality_check(p, 0.0, 0.0, 0.0);
                       c.values = Json{{"a1", g.ric_lower_collar},
                                       {"a2", g.mean_lower},
                                       {"a3", g.kappa_lower},
                                       {"sigma", chk.sigma1},
                                       {"residual", chk.residual},
                                       {"degenerate_residual", degenerate.residual},
                                       {"identity_residual", chk.identity_residual},
                                       {"hessian_validation_error", chk.hessian_validation_error}};
                       c.pass = chk.holds && degenerate.holds && chk.identity_residual <= kInequalityTol &&
                                chk.hessian_validation_error <= kInequalityTol;
                       return c;
                     }});
  }
  struct Collar {
    std::string name;
    std::function<WarpedProfile()> make;
    double eps;
    double delta;
  };
  const std::vector<Collar> collars = {
      {"flat/n=2/R=1/delta=0.25/eps=1", [] { return WarpedProfile::flat(2, 1.0); }, 1.0, 0.25},
      {"flat/n=3/R=1/delta=0.1/eps=0.2", [] { return WarpedProfile::flat(3, 1.0); }, 0.2, 0.1},
      {"cap/n=2/R=pi/4/delta=pi/16/eps=0.5", [] { return WarpedProfile::spherical(2, 1.0, pi / 4); }, 0.5, pi / 16},
      {"cap/n=1/R=pi/3/delta=0.3/eps=2", [] { return WarpedProfile::spherical(1, 1.0, pi / 3); }, 2.0, 0.3},
  };
  for (const auto& m : collars) {
    const std::string key = "reilly/collar/" + m.name;
    cases.push_back({key, [m, key] {
                       CaseRecord c = record(key, Json{{"model", m.name}, {"epsilon", m.eps}, {"delta", m.delta}});
                       const auto chk = collar_inequality_check(m.make(), m.eps, m.delta);
                       c.values = Json{{"residual", chk.residual}, {"E", chk.kernel_E}};
                       c.pass = chk.holds;
                       return c;
                     }});
  }
  const std::vector<Model> hessian_models = {
      {"hyperbolic/n=2/R=0.5", [] { return WarpedProfile::hyperbolic(2, 1.0, 0.5); }},
      {"flat/n=4/R=2", [] { return WarpedProfile::flat(4, 2.0); }},
  };
  for (const auto& m : hessian_models) {
    const std::string key = "reilly/hessian/" + m.name;
    cases.push_back({key, [m, key] {
                       CaseRecord c = record(key, Json{{"model", m.name}});
                       const double err = validate_hessian_reduction(m.make(), 20, 0);
                       c.values = Json{{"max_relative_error", err}};
                       c.pass = err <= kInequalityTol;
                       return c;
                     }});
  }
}

// ---------------------------------------------------------------- properties

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

GeometricData flat_ball_data(int n) {
  GeometricData g;
  g.n = n;
  g.kappa_lower = g.kappa_upper = 1.0;
  g.mean_lower = g.mean_upper = n;
  g.rolling_radius = g.collar_radius = 1.0;
  return g;
}

void add_properties(std::vector<PendingCase>& cases, const SuiteOptions& opts) {
  const std::uint64_t seed = opts.seed;
  const int samples = opts.property_samples;

  cases.push_back({"properties/fixed_point", [seed, samples] {
                     CaseRecord c = record("properties/fixed_point", Json{{"seed", seed}, {"samples", samples}});
                     std::mt19937_64 rng(seed);
                     std::uniform_int_distribution<int> dim(1, 10);
                     std::bernoulli_distribution zero_a(0.25);
                     double worst = 0.0;
                     double worst_mc = 0.0;
                     int non_monotone = 0;
                     for (int i = 0; i < samples; ++i) {
                       const double E = log_uniform(rng, 0.1, 100.0);
                       const int n = dim(rng);
                       const double kappa = log_uniform(rng, 1e-2, 10.0);
                       const double a_sq = zero_a(rng) ? 0.0 : log_uniform(rng, 1e-3, 10.0);
                       const double h = log_uniform(rng, 1e-2, 10.0);
                       const auto tr = iterate_epsilon(E, n, kappa, a_sq);
                       worst = std::max(worst, std::abs(tr.back() - fixed_point_epsilon(E, n, kappa, a_sq)));
                       const auto tm = iterate_epsilon_mean_convex(E, h, kappa, a_sq);
                       worst_mc = std::max(worst_mc, std::abs(tm.back() - fixed_point_epsilon_mean_convex(E, h, kappa, a_sq)));
                       if (tr.size() < 2 || !std::is_sorted(tr.begin(), tr.end(), std::less_equal<>())) ++non_monotone;
                       if (!std::is_sorted(tm.begin(), tm.end(), std::less_equal<>())) ++non_monotone;
                     }
                     c.values = Json{{"max_error", worst}, {"max_error_mean_convex", worst_mc}, {"non_monotone", non_monotone}};
                     c.pass = worst <= 1e-10 && worst_mc <= 1e-10 && non_monotone == 0;
                     return c;
                   }});

  cases.push_back({"properties/baseline_domination", [seed, samples] {
                     CaseRecord c = record("properties/baseline_domination", Json{{"seed", seed}, {"samples", samples}});
                     std::mt19937_64 rng(seed + 1);
                     std::uniform_int_distribution<int> dim(1, 10);
                     int failures = 0;
                     double min_gain = kInfinity;
                     for (int i = 0; i < samples; ++i) {
                       GeometricData g;
                       g.n = dim(rng);
                       g.kappa_lower = log_uniform(rng, 1e-2, 10.0);
                       g.kappa_upper = g.kappa_lower * log_uniform(rng, 1.0, 10.0);
                       g.mean_lower = g.n * g.kappa_lower;
                       g.mean_upper = g.n * g.kappa_upper;
                       g.ric_lower_collar = log_uniform(rng, 1e-3, 10.0);
                       g.ric_upper_collar = g.ric_lower_collar * 2.0;
                       g.sec_upper_collar = log_uniform(rng, 1e-3, 10.0);
                       g.rolling_radius = log_uniform(rng, 1e-2, 10.0);
                       g.collar_radius = g.rolling_radius;
                       const auto r = theorem_A_bound(g);
                       const double gain = r.bound - 0.5 * g.kappa_lower;
                       min_gain = std::min(min_gain, gain / g.kappa_lower);
                       if (!(r.applicable && gain > 0.0)) ++failures;
                     }
                     c.values = Json{{"failures", failures}, {"min_relative_gain", min_gain}};
                     c.pass = failures == 0;
                     return c;
                   }});

  cases.push_back({"properties/flat_ball_limit", [] {
                     CaseRecord c = record("properties/flat_ball_limit", Json::object());
                     double worst_delta = 0.0;
                     double worst_F = 0.0;
                     for (int n : {2, 4, 9, 100}) {
                       const auto r = theorem_A_bound(flat_ball_data(n));
                       const double sn = std::sqrt(static_cast<double>(n));
                       worst_delta = std::max(worst_delta, std::abs(*r.delta_star - (sn - 1.0) / (n - 1.0)));
                       worst_F = std::max(worst_F, std::abs(*r.kernels.F - (2.0 + 4.0 * sn + n)));
                     }
                     bool increasing = true;
                     double prev = 0.0;
                     for (int n = 1; n <= 10000; n = n < 64 ? n + 1 : n * 2) {
                       const double b = theorem_A_bound(flat_ball_data(n)).bound;
                       if (!(b > prev)) increasing = false;
                       prev = b;
                     }
                     const double b4 = theorem_A_bound(flat_ball_data(10000)).bound;
                     c.values = Json{{"max_delta_error", worst_delta}, {"max_F_error", worst_F}, {"increasing", increasing},
                                     {"bound_n_10000", b4}};
                     c.pass = worst_delta <= 1e-8 && worst_F <= 1e-10 && increasing && b4 > 0.98 && b4 < 1.0;
                     return c;
                   }});

  cases.push_back({"properties/monotonicity", [] {
                     CaseRecord c = record("properties/monotonicity", Json::object());
                     GeometricData base;
                     base.n = 3;
                     base.kappa_lower = 0.8;
                     base.kappa_upper = 1.5;
                     base.mean_lower = 3 * 0.8;
                     base.mean_upper = 3 * 1.5;
                     base.ric_lower_collar = 0.5;
                     base.ric_upper_collar = 4.0;
                     base.sec_upper_collar = 0.7;
                     base.rolling_radius = base.collar_radius = 0.6;
                     auto bound = [](const GeometricData& g) { return theorem_A_bound(g).bound; };
                     int violations = 0;
                     auto sweep = [&](auto set, const std::vector<double>& grid, int direction) {
                       double prev = 0.0;
                       for (std::size_t i = 0; i < grid.size(); ++i) {
                         GeometricData g = base;
                         set(g, grid[i]);
                         const double b = bound(g);
                         const double slack = 1e-12 * std::abs(b);
                         if (i > 0 && direction * (b - prev) < -slack) ++violations;
                         prev = b;
                       }
                     };
                     sweep([](GeometricData& g, double v) { g.ric_lower_collar = v; }, {0.0, 0.1, 0.5, 1.0, 2.0, 3.9}, +1);
                     sweep([](GeometricData& g, double v) { g.kappa_lower = v; g.mean_lower = g.n * v; },
                           {0.1, 0.3, 0.5, 0.8, 1.2, 1.5}, +1);
                     sweep([](GeometricData& g, double v) { g.kappa_upper = v; g.mean_upper = g.n * v; },
                           {0.8, 1.0, 1.5, 2.0, 4.0, 10.0}, -1);
                     sweep([](GeometricData& g, double v) { g.sec_upper_collar = v * v; }, {0.0, 0.2, 0.5, 1.0, 2.0, 5.0}, -1);
                     c.values = Json{{"violations", violations}};
                     c.pass = violations == 0;
                     return c;
                   }});

  cases.push_back({"properties/scaling_bounds", [] {
                     CaseRecord c = record("properties/scaling_bounds", Json::object());
                     std::vector<GeometricData> geoms = {curvature_data(WarpedProfile::flat(2, 1.0)),
                                                         curvature_data(WarpedProfile::spherical(2, 1.0, pi / 4)),
                                                         curvature_data(WarpedProfile::spherical(3, 1.0, pi / 3))};
                     GeometricData corb = geoms[1];
                     corb.sec_lower_collar = -0.25;
                     geoms.push_back(corb);
                     double worst = 0.0;
                     double worst_delta = 0.0;
                     for (const auto& g : geoms) {
                       for (double s : {0.5, 2.0, 3.7}) {
                         for (Theorem t : {Theorem::ThmA, Theorem::ThmE, Theorem::ThmF, Theorem::ThmC, Theorem::CorB}) {
                           const auto r1 = bound_for(t, g);
                           const auto rs = bound_for(t, g.scaled(s));
                           if (r1.applicable != rs.applicable) {
                             worst = kInfinity;
                             continue;
                           }
                           if (!r1.applicable) continue;
                           worst = std::max(worst, std::abs(rs.bound * s - r1.bound) / std::abs(r1.bound));
                           if (r1.delta_star)
                             worst_delta = std::max(worst_delta, std::abs(*rs.delta_star / s - *r1.delta_star) / *r1.delta_star);
                         }
                       }
                     }
                     c.values = Json{{"max_relative_bound_error", worst}, {"max_relative_delta_error", worst_delta}};
                     c.pass = worst <= 1e-12 && worst_delta <= 1e-6;
                     return c;
                   }});

  cases.push_back({"properties/scaling_oracle", [] {
                     CaseRecord c = record("properties/scaling_oracle", Json::object());
                     const std::vector<WarpedProfile> profiles = {
                         WarpedProfile::flat(2, 1.0), WarpedProfile::spherical(2, 1.0, pi / 4),
                         WarpedProfile::hyperbolic(1, 1.0, 0.5),
                         WarpedProfile::custom(
                             2, 1.0, [](double r) { return r + r * r * r / 6.0; },
                             [](double r) { return 1.0 + r * r / 2.0; }, [](double r) { return r; })};
                     double worst = 0.0;
                     for (const auto& p : profiles) {
                       for (double s : {0.5, 3.0}) {
                         const auto q = p.scaled(s);
                         for (int l = 1; l <= 3; ++l)
                           worst = std::max(worst, std::abs(mode_sigma(q, l) * s - mode_sigma(p, l)) / mode_sigma(p, l));
                       }
                     }
                     c.values = Json{{"max_relative_error", worst}};
                     c.pass = worst <= 1e-9;
                     return c;
                   }});

  cases.push_back({"properties/recovery", [] {
                     CaseRecord c = record("properties/recovery", Json::object());
                     const auto g = curvature_data(WarpedProfile::spherical(2, 1.0, pi / 4));
                     const double window = delta_sup(g.collar_radius, g.beta(), g.kappa_upper);
                     double worst = 0.0;
                     for (int i = 1; i <= 20; ++i) {
                       BoundOptions o;
                       o.delta = window * i / 21.0;
                       GeometricData h = g;
                       h.mean_lower = g.n * g.kappa_lower;
                       const auto a = theorem_A_bound(g, o);
                       const auto f = theorem_F_bound(h, o);
                       worst = std::max(worst, std::abs(a.bound - f.bound) / a.bound);
                     }
                     c.values = Json{{"max_relative_difference", worst}};
                     c.pass = worst <= 1e-12;
                     return c;
                   }});

  cases.push_back({"properties/delta_window", [] {
                     CaseRecord c = record("properties/delta_window", Json::object());
                     bool ok = true;
                     for (const auto& k : {ComparisonKernel::E(2, 0.0, 1.0), ComparisonKernel::E(1, 1.0, 1.0),
                                           ComparisonKernel::E(3, 2.0, 0.5), ComparisonKernel::P(1.5, 2.0)}) {
                       const double T = k.singular_time();
                       ok = ok && k(1e-8 * T) > 1e6 / T && k(T * (1.0 - 1e-9)) > 1e6 / T;
                       const auto m = optimize_delta(k, T);
                       ok = ok && m.delta > 0.0 && m.delta < T && m.value < k(0.5 * m.delta) && m.value < k(0.5 * (m.delta + T));
                     }
                     c.pass = ok;
                     return c;
                   }});
}

std::vector<PendingCase> collect(std::string_view name, const SuiteOptions& opts) {
  std::vector<PendingCase> cases;
  const bool all = name == "all";
  if (all || name == "balls") add_balls(cases);
  if (all || name == "caps") add_caps(cases);
  if (all || name == "hyperbolic_gap") add_hyperbolic_gap(cases);
  if (all || name == "riccati") add_riccati(cases);
  if (all || name == "reilly") add_reilly(cases);
  if (all || name == "properties") add_properties(cases, opts);
  return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"balls", "caps", "hyperbolic_gap", "riccati",
                                                 "reilly", "properties", "all"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InvalidInput("unknown suite '" + std::string(name) + "'");
  if (opts.property_samples < 1) throw InvalidInput("property_samples must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.name = std::string(name);
  rep.cases = execute(collect(name, opts), opts.parallel);
  rep.pass = !rep.cases.empty() && std::all_of(rep.cases.begin(), rep.cases.end(), [](const CaseRecord& c) {
    return c.pass && c.margin >= -kMarginSlack;
  });
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Json to_json(const SuiteReport& r, bool include_timing) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json j{{"key", c.key}, {"inputs", c.inputs}, {"values", c.values}, {"margin", c.margin}, {"pass", c.pass}};
    if (!c.message.empty()) j["message"] = c.message;
    cases.push_back(j);
  }
  Json out{{"suite", r.name}, {"pass", r.pass}, {"case_count", r.cases.size()}, {"cases", cases}};
  if (include_timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

}  // namespace steklov
