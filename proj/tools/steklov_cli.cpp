// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 invalid input.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/oracle.hpp"
#include "steklov/report_io.hpp"
#include "steklov/sweep.hpp"
#include "steklov/verification.hpp"

using namespace steklov;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::optional<double> parse_delta(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("--delta must be 'auto' or a number, got '" + s + "'");
  }
  if (used != s.size()) throw InvalidInput("--delta must be 'auto' or a number, got '" + s + "'");
  return v;
}

int cmd_bound(const std::string& input, const std::string& theorem_flag, const std::string& delta_flag) {
  InputDocument doc = read_input_file(input);
  const GeometricData g = doc.resolve_geometry();
  BoundOptions opts = doc.bound_options;
  if (!delta_flag.empty()) opts.delta = parse_delta(delta_flag);
  std::string selector = !theorem_flag.empty() ? theorem_flag : doc.theorem.value_or("auto");

  if (selector == "auto") {
    print(bound_document(g, best_bound(g, opts)));
    return 0;
  }
  if (selector == "escobar") {
    Json reports = Json::array();
    for (const auto& r : escobar_baselines(g)) reports.push_back(to_json(r));
    print(Json{{"geometry", to_json(g)}, {"options", {{"theorem", "escobar"}}}, {"reports", reports}});
    return 0;
  }
  const auto t = theorem_from_string(selector);
  if (!t) throw InvalidInput("unknown theorem selector '" + selector + "'");
  print(bound_document(g, bound_for(*t, g, opts)));
  return 0;
}

int cmd_sweep(const std::string& input, int samples, const std::string& output) {
  const GeometricData g = read_input_file(input).resolve_geometry();
  const SweepTable table = delta_sweep(g, samples);
  if (output.empty() || output == "-") {
    write_csv(std::cout, table);
    return 0;
  }
  std::ofstream os(output);
  if (!os) throw InvalidInput("cannot open '" + output + "' for writing");
  write_csv(os, table);
  if (!os) throw InvalidInput("failed writing '" + output + "'");
  return 0;
}

int cmd_oracle(const std::string& input, ProfileSpec spec, int L_max, double tol, bool all_modes) {
  if (!input.empty()) {
    const InputDocument doc = read_input_file(input);
    if (!doc.profile) throw InvalidInput("oracle input needs a profile record");
    spec = *doc.profile;
    L_max = doc.L_max;
    tol = doc.oracle_tol;
  }
  if (L_max < 1 || L_max > 200) throw InvalidInput("--lmax must lie in [1, 200]");
  const WarpedProfile p = spec.build();
  OracleOptions o;
  o.tol = tol;
  o.early_stop = !all_modes;
  print(Json{{"profile", to_json(spec)}, {"L_max", L_max}, {"estimate", to_json(steklov_spectrum(p, L_max, o))}});
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed, int samples, bool serial_cases,
               bool timing) {
  SuiteOptions o;
  if (seed) {
    o.seed = *seed;
  } else if (const char* env = std::getenv("STEKLOV_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("STEKLOV_SEED must be a non-negative integer");
    }
  }
  o.property_samples = samples;
  o.parallel = !serial_cases;
  const SuiteReport rep = run_suite(suite, o);
  print(to_json(rep, timing));
  for (const auto& c : rep.cases)
    if (!c.pass) std::cerr << "FAIL " << c.key << (c.message.empty() ? "" : ": " + c.message) << '\n';
  return rep.pass ? 0 : kExitVerifyFailed;
}

int cmd_gap(int n, double a_sq, double kappa) {
  if (n < 1) throw InvalidInput("--n must be >= 1");
  if (!(a_sq >= 0.0)) throw InvalidInput("--a-sq must be >= 0 (the Ricci lower bound is -a^2)");
  const auto gap = spectral_gap(n, a_sq, kappa);
  Json j{{"n", n}, {"a_sq", a_sq}, {"kappa", kappa}};
  j["gap"] = gap ? Json{{"lower", gap->lower}, {"upper", gap->upper}} : Json(nullptr);
  print(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalue lower bounds and verification"};
  app.require_subcommand(1);

  std::string input, theorem, delta, output, suite = "all";
  int samples = 50;

  auto* bound = app.add_subcommand("bound", "Lower bound for the first Steklov eigenvalue");
  bound->add_option("--input", input, "Input document (JSON)")->required();
  bound->add_option("--theorem", theorem, "auto|A|E|F|C|corB|escobar (default: document, else auto)");
  bound->add_option("--delta", delta, "auto or a fixed collar width");

  auto* sweep = app.add_subcommand("sweep", "Tabulate the kernels across the delta window");
  sweep->add_option("--input", input, "Input document (JSON)")->required();
  sweep->add_option("--samples", samples, "Number of interior delta values")->check(CLI::Range(2, 1000000));
  sweep->add_option("--output", output, "CSV path (default: stdout)");

  ProfileSpec spec;
  int L_max = 10;
  double tol = 1e-9;
  bool all_modes = false;
  auto* oracle = app.add_subcommand("oracle", "Steklov spectrum of a rotationally symmetric ball");
  oracle->add_option("--input", input, "Input document with a profile record");
  oracle->add_option("--kind", spec.kind, "flat|spherical|hyperbolic");
  oracle->add_option("--c", spec.c, "Curvature magnitude");
  oracle->add_option("--R", spec.R, "Ball radius");
  oracle->add_option("--n", spec.n, "Boundary dimension");
  oracle->add_option("--lmax", L_max, "Highest harmonic degree");
  oracle->add_option("--tol", tol, "Relative tolerance per mode");
  oracle->add_flag("--all-modes", all_modes, "Disable the early stop");

  std::optional<std::uint64_t> seed;
  int prop_samples = 1000;
  bool serial_cases = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "balls|caps|hyperbolic_gap|riccati|reilly|properties|all");
  verify->add_option("--seed", seed, "Seed for property suites (else STEKLOV_SEED, else 0)");
  verify->add_option("--property-samples", prop_samples, "Random tuples per property check");
  verify->add_flag("--serial", serial_cases, "Run cases sequentially");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  int gap_n = 2;
  double a_sq = 0.0, kappa = 0.0;
  auto* gap = app.add_subcommand("gap", "Spectral gap from a negative Ricci lower bound");
  gap->add_option("--n", gap_n, "Boundary dimension")->required();
  gap->add_option("--a-sq", a_sq, "a^2 with Ric >= -a^2")->required();
  gap->add_option("--kappa", kappa, "Principal curvature lower bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*bound) return cmd_bound(input, theorem, delta);
    if (*sweep) return cmd_sweep(input, samples, output);
    if (*oracle) return cmd_oracle(input, spec, L_max, tol, all_modes);
    if (*verify) return cmd_verify(suite, seed, prop_samples, serial_cases, timing);
    if (*gap) return cmd_gap(gap_n, a_sq, kappa);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitInvalid;
}
