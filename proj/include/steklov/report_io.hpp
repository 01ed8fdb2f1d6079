#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "steklov/bounds.hpp"
#include "steklov/geometry.hpp"
#include "steklov/oracle.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov {

using Json = nlohmann::json;

struct ProfileSpec {
  std::string kind = "flat";
  double c = 1.0;
  double R = 1.0;
  int n = 2;
  std::optional<double> collar_r;  // defaults to R

  [[nodiscard]] WarpedProfile build() const;
};

/// Parsed input document: exactly one of geometry / profile, plus overrides.
struct InputDocument {
  std::optional<GeometricData> geometry;
  std::optional<ProfileSpec> profile;
  std::optional<std::string> theorem;  // "auto" or a theorem name
  BoundOptions bound_options;
  int L_max = 10;
  double oracle_tol = 1e-9;

  /// The geometric data, converting a profile through curvature_data.
  [[nodiscard]] GeometricData resolve_geometry() const;
};

[[nodiscard]] Json to_json(const GeometricData& g);
[[nodiscard]] GeometricData geometry_from_json(const Json& j);
[[nodiscard]] Json to_json(const ProfileSpec& p);
[[nodiscard]] ProfileSpec profile_from_json(const Json& j);
[[nodiscard]] Json to_json(const BoundReport& r);
[[nodiscard]] Json to_json(const SteklovEstimate& e);

/// Throws InvalidInput on malformed documents. Unknown top-level keys other
/// than "report" are rejected so that typos do not silently pass.
[[nodiscard]] InputDocument parse_input(const Json& j);
[[nodiscard]] InputDocument read_input_file(const std::string& path);

/// Report document for `bound`: echoes the geometry and the options that
/// reproduce the reported bound (theorem and delta), followed by the report.
[[nodiscard]] Json bound_document(const GeometricData& g, const BoundReport& r);

}  // namespace steklov
