#include "steklov/geometry.hpp"

#include <cmath>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov {

namespace {
// Slack for ordering checks between values derived from the same sampled data.
constexpr double kOrderSlack = 1e-12;

bool le(double a, double b) {
  return a <= b + kOrderSlack * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

double GeometricData::b() const { return std::sqrt(std::max(0.0, ric_upper_collar)); }
double GeometricData::beta() const { return std::sqrt(std::max(0.0, sec_upper_collar)); }
double GeometricData::alpha() const { return std::sqrt(std::max(0.0, -sec_lower_collar)); }

GeometricData GeometricData::scaled(double s) const {
  GeometricData g = *this;
  const double s2 = s * s;
  g.ric_lower_global /= s2;
  g.ric_lower_collar /= s2;
  g.ric_upper_collar /= s2;
  g.sec_upper_collar /= s2;
  g.sec_lower_collar /= s2;
  g.kappa_lower /= s;
  g.kappa_upper /= s;
  g.mean_lower /= s;
  g.mean_upper /= s;
  g.rolling_radius *= s;
  g.collar_radius *= s;
  return g;
}

std::vector<std::string> invariant_violations(const GeometricData& g) {
  std::vector<std::string> out;
  const double fields[] = {g.ric_lower_global, g.ric_lower_collar, g.ric_upper_collar,
                           g.sec_upper_collar, g.sec_lower_collar, g.kappa_lower,
                           g.kappa_upper,      g.mean_lower,       g.mean_upper,
                           g.rolling_radius,   g.collar_radius};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      out.emplace_back("all fields must be finite");
      return out;
    }
  }
  if (g.n < 1) out.emplace_back("n must be >= 1");
  if (!(g.rolling_radius > 0.0)) out.emplace_back("rolling_radius must be > 0");
  if (!(g.collar_radius > 0.0)) out.emplace_back("collar_radius must be > 0");
  if (!le(g.collar_radius, g.rolling_radius)) out.emplace_back("collar_radius must not exceed rolling_radius");
  if (g.ric_lower_collar < 0.0) out.emplace_back("ric_lower_collar must be >= 0");
  if (g.ric_upper_collar < 0.0) out.emplace_back("ric_upper_collar must be >= 0");
  if (!le(g.ric_lower_collar, g.ric_upper_collar)) out.emplace_back("ric_lower_collar must not exceed ric_upper_collar");
  if (g.sec_upper_collar < 0.0) out.emplace_back("sec_upper_collar must be >= 0");
  if (g.sec_lower_collar > 0.0) out.emplace_back("sec_lower_collar must be <= 0");
  if (!le(g.kappa_lower, g.kappa_upper)) out.emplace_back("kappa_lower must not exceed kappa_upper");
  if (!le(g.mean_lower, g.mean_upper)) out.emplace_back("mean_lower must not exceed mean_upper");
  if (!le(g.n * g.kappa_lower, g.mean_upper)) out.emplace_back("n*kappa_lower must not exceed mean_upper");
  if (!le(g.mean_lower, g.n * g.kappa_upper)) out.emplace_back("mean_lower must not exceed n*kappa_upper");
  return out;
}

void validate(const GeometricData& geom) {
  const auto v = invariant_violations(geom);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid geometric data:";
  for (const auto& s : v) os << ' ' << s << ';';
  throw InvalidInput(os.str());
}

}  // namespace steklov
