#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steklov/report_io.hpp"

namespace steklov {

/// Slack absorbing quadrature/shooting error in "oracle >= bound" comparisons.
inline constexpr double kMarginSlack = 1e-8;

struct CaseRecord {
  std::string key;  // canonical, unique within a suite; reports are sorted by it
  Json inputs;
  Json values;
  double margin = 0.0;  // >= -kMarginSlack for oracle-vs-bound cases, 0 otherwise
  bool pass = false;
  std::string message;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseRecord> cases;
  bool pass = false;
  double wall_time_s = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int property_samples = 1000;
  bool parallel = true;  // run cases concurrently (results are identical)
};

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one of: balls, caps, hyperbolic_gap, riccati, reilly, properties, all.
/// Unknown names throw InvalidInput.
[[nodiscard]] SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

/// Report document; wall time is included only when requested so that two
/// runs can be compared byte-for-byte.
[[nodiscard]] Json to_json(const SuiteReport& r, bool include_timing = true);

}  // namespace steklov
