// Serial reference vs OpenMP versions of the three parallel kernels.
#include <benchmark/benchmark.h>

#include "steklov/oracle.hpp"
#include "steklov/sweep.hpp"
#include "steklov/verification.hpp"

using namespace steklov;

namespace {

const OracleOptions kFullScan{1e-9, false};

void BM_SpectrumParallel(benchmark::State& st) {
  const auto p = WarpedProfile::hyperbolic(3, 1.0, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(steklov_spectrum(p, static_cast<int>(st.range(0)), kFullScan));
}

void BM_SpectrumSerial(benchmark::State& st) {
  const auto p = WarpedProfile::hyperbolic(3, 1.0, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(serial::steklov_spectrum(p, static_cast<int>(st.range(0)), kFullScan));
}

GeometricData sweep_geometry() {
  GeometricData g;
  g.n = 3;
  g.kappa_lower = 0.8;
  g.kappa_upper = 1.2;
  g.mean_lower = 2.4;
  g.mean_upper = 3.6;
  g.ric_lower_collar = 0.5;
  g.ric_upper_collar = 2.0;
  g.sec_upper_collar = 0.6;
  g.rolling_radius = g.collar_radius = 0.5;
  return g;
}

void BM_SweepParallel(benchmark::State& st) {
  const auto g = sweep_geometry();
  for (auto _ : st) benchmark::DoNotOptimize(delta_sweep(g, static_cast<int>(st.range(0))));
}

void BM_SweepSerial(benchmark::State& st) {
  const auto g = sweep_geometry();
  for (auto _ : st) benchmark::DoNotOptimize(serial::delta_sweep(g, static_cast<int>(st.range(0))));
}

void BM_VerifyAll(benchmark::State& st) {
  SuiteOptions o;
  o.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(run_suite("all", o));
}

}  // namespace

BENCHMARK(BM_SpectrumParallel)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSerial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAll)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
