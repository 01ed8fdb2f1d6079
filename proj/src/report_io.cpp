#include "steklov/report_io.hpp"

#include <fstream>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

double number(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  if (!it->is_number()) throw InvalidInput(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

int integer(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const char* where) {
  std::set<std::string> names(known.begin(), known.end());
  for (const auto& [k, v] : j.items()) {
    if (names.count(k) == 0) throw InvalidInput(std::string("unknown key '") + k + "' in " + where);
  }
}

}  // namespace

WarpedProfile ProfileSpec::build() const { return WarpedProfile::from_kind(kind, n, c, R); }

GeometricData InputDocument::resolve_geometry() const {
  if (geometry) return *geometry;
  const WarpedProfile p = profile->build();
  return curvature_data(p, profile->collar_r.value_or(p.R()));
}

Json to_json(const GeometricData& g) {
  return Json{{"n", g.n},
              {"ric_lower_global", g.ric_lower_global},
              {"ric_lower_collar", g.ric_lower_collar},
              {"ric_upper_collar", g.ric_upper_collar},
              {"sec_upper_collar", g.sec_upper_collar},
              {"sec_lower_collar", g.sec_lower_collar},
              {"kappa_lower", g.kappa_lower},
              {"kappa_upper", g.kappa_upper},
              {"mean_lower", g.mean_lower},
              {"mean_upper", g.mean_upper},
              {"rolling_radius", g.rolling_radius},
              {"collar_radius", g.collar_radius}};
}

GeometricData geometry_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("geometry must be an object");
  reject_unknown(j,
                 {"n", "ric_lower_global", "ric_lower_collar", "ric_upper_collar", "sec_upper_collar",
                  "sec_lower_collar", "kappa_lower", "kappa_upper", "mean_lower", "mean_upper", "rolling_radius",
                  "collar_radius"},
                 "geometry");
  GeometricData g;
  g.n = integer(j, "n");
  g.ric_lower_global = number_or(j, "ric_lower_global", 0.0);
  g.ric_lower_collar = number_or(j, "ric_lower_collar", 0.0);
  g.ric_upper_collar = number_or(j, "ric_upper_collar", g.ric_lower_collar);
  g.sec_upper_collar = number_or(j, "sec_upper_collar", 0.0);
  g.sec_lower_collar = number_or(j, "sec_lower_collar", 0.0);
  g.kappa_lower = number(j, "kappa_lower");
  g.kappa_upper = number_or(j, "kappa_upper", g.kappa_lower);
  g.mean_lower = number_or(j, "mean_lower", g.n * g.kappa_lower);
  g.mean_upper = number_or(j, "mean_upper", g.n * g.kappa_upper);
  g.rolling_radius = number(j, "rolling_radius");
  g.collar_radius = number_or(j, "collar_radius", g.rolling_radius);
  validate(g);
  return g;
}

Json to_json(const ProfileSpec& p) {
  Json j{{"kind", p.kind}, {"c", p.c}, {"R", p.R}, {"n", p.n}};
  if (p.collar_r) j["collar_r"] = *p.collar_r;
  return j;
}

ProfileSpec profile_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("profile must be an object");
  reject_unknown(j, {"kind", "c", "R", "n", "collar_r"}, "profile");
  ProfileSpec p;
  if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidInput("profile.kind must be a string");
  p.kind = j["kind"].get<std::string>();
  p.c = number_or(j, "c", 1.0);
  p.R = number(j, "R");
  p.n = integer(j, "n");
  if (j.contains("collar_r")) p.collar_r = number(j, "collar_r");
  (void)p.build();  // validates kind, n, c, R
  return p;
}

Json to_json(const BoundReport& r) {
  Json j{{"theorem", std::string(to_string(r.theorem))},
         {"applicable", r.applicable},
         {"reasons", r.reasons},
         {"notes", r.notes},
         {"strict", r.strict}};
  if (r.applicable && r.theorem != Theorem::SpectralGap) j["bound"] = r.bound;
  if (r.delta_star) j["delta_star"] = *r.delta_star;
  if (r.kernels.window > 0.0) {
    Json k{{"window", r.kernels.window}};
    if (r.kernels.E) k["E"] = *r.kernels.E;
    if (r.kernels.F) k["F"] = *r.kernels.F;
    if (r.kernels.P) k["P"] = *r.kernels.P;
    if (r.kernels.Q) k["Q"] = *r.kernels.Q;
    if (r.kernels.T) k["T"] = *r.kernels.T;
    j["kernel_values"] = k;
  }
  if (!r.epsilon_trace.empty()) {
    j["epsilon_trace_length"] = r.epsilon_trace.size();
    j["epsilon_trace"] = r.epsilon_trace;
  }
  if (r.gap) j["gap"] = Json{{"lower", r.gap->lower}, {"upper", r.gap->upper}};
  if (!r.sub_reports.empty()) {
    Json subs = Json::array();
    for (const auto& s : r.sub_reports) subs.push_back(to_json(s));
    j["sub_reports"] = subs;
  }
  return j;
}

Json to_json(const SteklovEstimate& e) {
  Json modes = Json::array();
  for (const auto& m : e.modes)
    modes.push_back(Json{{"ell", m.ell}, {"lambda", m.lambda_ell}, {"sigma", m.sigma_ell}, {"multiplicity", m.multiplicity}});
  return Json{{"sigma1", e.sigma1},
              {"sigma1_ell", e.sigma1_ell},
              {"error_estimate", e.error_estimate},
              {"monotone", e.monotone},
              {"higher_modes_unscanned", e.higher_modes_unscanned},
              {"modes", modes}};
}

InputDocument parse_input(const Json& j) {
  if (!j.is_object()) throw InvalidInput("input document must be an object");
  reject_unknown(j, {"geometry", "profile", "options", "report"}, "input document");
  InputDocument doc;
  const bool has_geom = j.contains("geometry");
  const bool has_prof = j.contains("profile");
  if (has_geom == has_prof) throw InvalidInput("input document needs exactly one of 'geometry' or 'profile'");
  if (has_geom) doc.geometry = geometry_from_json(j["geometry"]);
  if (has_prof) doc.profile = profile_from_json(j["profile"]);
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw InvalidInput("options must be an object");
    reject_unknown(o, {"theorem", "delta", "delta_tol", "iter_tol", "max_iter", "L_max", "oracle_tol"}, "options");
    if (o.contains("theorem")) {
      if (!o["theorem"].is_string()) throw InvalidInput("options.theorem must be a string");
      doc.theorem = o["theorem"].get<std::string>();
    }
    if (o.contains("delta") && !(o["delta"].is_string() && o["delta"] == "auto"))
      doc.bound_options.delta = number(o, "delta");
    doc.bound_options.delta_tol = number_or(o, "delta_tol", doc.bound_options.delta_tol);
    doc.bound_options.iter_tol = number_or(o, "iter_tol", doc.bound_options.iter_tol);
    if (o.contains("max_iter")) doc.bound_options.max_iter = integer(o, "max_iter");
    if (o.contains("L_max")) doc.L_max = integer(o, "L_max");
    doc.oracle_tol = number_or(o, "oracle_tol", doc.oracle_tol);
    if (!(doc.bound_options.delta_tol > 0.0 && doc.bound_options.delta_tol <= 1e-3))
      throw InvalidInput("options.delta_tol must lie in (0, 1e-3]");
    if (!(doc.bound_options.iter_tol > 0.0 && doc.bound_options.iter_tol <= 1e-3))
      throw InvalidInput("options.iter_tol must lie in (0, 1e-3]");
    if (doc.bound_options.max_iter < 1) throw InvalidInput("options.max_iter must be >= 1");
    if (doc.L_max < 1 || doc.L_max > 200) throw InvalidInput("options.L_max must lie in [1, 200]");
    if (!(doc.oracle_tol >= 1e-13 && doc.oracle_tol <= 1e-3))
      throw InvalidInput("options.oracle_tol must lie in [1e-13, 1e-3]");
  }
  return doc;
}

InputDocument read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed input document: ") + e.what());
  }
  return parse_input(j);
}

Json bound_document(const GeometricData& g, const BoundReport& r) {
  Json options{{"theorem", std::string(to_string(r.theorem))}};
  if (r.delta_star) options["delta"] = *r.delta_star;
  return Json{{"geometry", to_json(g)}, {"options", options}, {"report", to_json(r)}};
}

}  // namespace steklov
