#include "steklov/sweep.hpp"

#include <iomanip>
#include <ostream>

#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

namespace steklov {

namespace {

SweepTable plan(const GeometricData& g, int samples) {
  validate(g);
  if (samples < 2) throw InvalidInput("sweep: samples must be >= 2");
  if (!(g.kappa_upper > 0.0)) throw InvalidInput("sweep: requires kappa_upper > 0");
  SweepTable t;
  t.window = delta_sup(g.collar_radius, g.beta(), g.kappa_upper);
  t.rows.resize(static_cast<std::size_t>(samples));
  const bool gate = g.kappa_lower > 0.0 && -g.sec_lower_collar <= g.kappa_lower * g.kappa_lower &&
                    g.mean_upper > 0.0;
  if (gate) {
    const double p_window = delta_sup(g.collar_radius, g.b(), g.mean_upper);
    const double last = t.window * samples / (samples + 1.0);
    t.has_ricci = last < p_window * (1.0 - kSingularityGuard);
  }
  return t;
}

void fill(const GeometricData& g, SweepTable& t, std::size_t i) {
  const double samples = static_cast<double>(t.rows.size());
  SweepRow& row = t.rows[i];
  row.delta = t.window * static_cast<double>(i + 1) / (samples + 1.0);
  row.E = kernel_E(row.delta, g.n, g.beta(), g.kappa_upper);
  row.F = 2.0 * row.E - g.n * g.kappa_lower;
  row.bound_A = 0.5 * g.kappa_lower + 0.5 * fixed_point_epsilon(row.E, g.n, g.kappa_lower, g.a_sq());
  if (t.has_ricci) {
    row.P = kernel_P(row.delta, g.b(), g.mean_upper);
    row.Q = 2.0 * row.P - g.n * g.kappa_lower;
    row.bound_C = 0.5 * g.kappa_lower + 0.5 * fixed_point_epsilon(row.P, g.n, g.kappa_lower, g.a_sq());
  }
}

}  // namespace

SweepTable delta_sweep(const GeometricData& g, int samples) {
  SweepTable t = plan(g, samples);
  const long n = static_cast<long>(t.rows.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) fill(g, t, static_cast<std::size_t>(i));
  return t;
}

SweepTable serial::delta_sweep(const GeometricData& g, int samples) {
  SweepTable t = plan(g, samples);
  for (std::size_t i = 0; i < t.rows.size(); ++i) fill(g, t, i);
  return t;
}

void write_csv(std::ostream& os, const SweepTable& t) {
  const auto old_flags = os.flags();
  const auto old_prec = os.precision();
  os << std::setprecision(17);
  os << "delta,E,F,bound_A";
  if (t.has_ricci) os << ",P,Q,bound_C";
  os << '\n';
  for (const auto& r : t.rows) {
    os << r.delta << ',' << r.E << ',' << r.F << ',' << r.bound_A;
    if (t.has_ricci) os << ',' << r.P << ',' << r.Q << ',' << r.bound_C;
    os << '\n';
  }
  os.flags(old_flags);
  os.precision(old_prec);
}

}  // namespace steklov
