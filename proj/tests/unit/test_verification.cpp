#include <doctest.h>

#include "steklov/errors.hpp"
#include "steklov/verification.hpp"

using namespace steklov;

TEST_CASE("each suite passes and reports sorted keys") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    SuiteOptions o;
    o.property_samples = 200;
    const auto rep = run_suite(name, o);
    CHECK_MESSAGE(rep.pass, name);
    for (std::size_t i = 1; i < rep.cases.size(); ++i) CHECK(rep.cases[i - 1].key < rep.cases[i].key);
  }
}

TEST_CASE("reports are deterministic across execution modes") {
  SuiteOptions par, ser;
  par.property_samples = ser.property_samples = 100;
  ser.parallel = false;
  CHECK(to_json(run_suite("properties", par), false).dump() == to_json(run_suite("properties", ser), false).dump());
}

TEST_CASE("seed changes the sampled tuples but not the verdict") {
  SuiteOptions o;
  o.property_samples = 100;
  o.seed = 12345;
  CHECK(run_suite("properties", o).pass);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS((void)run_suite("nope"), InvalidInput); }
