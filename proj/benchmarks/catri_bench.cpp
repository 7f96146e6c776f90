#include <benchmark/benchmark.h>

#include "catri/conjectures.hpp"
#include "catri/exact.hpp"
#include "catri/identities.hpp"
#include "catri/numbers.hpp"

namespace {

void BM_Binomial(benchmark::State& state) {
  const auto u = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(catri::binomial(u, u / 2));
}
BENCHMARK(BM_Binomial)->Arg(100)->Arg(1000)->Arg(5000);

// Cold row builds: the cache is emptied every iteration.
void BM_CRowBuild(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    catri::RowCache::global().clear();
    state.ResumeTiming();
    benchmark::DoNotOptimize(catri::c_row(m));
  }
}
BENCHMARK(BM_CRowBuild)->Arg(100)->Arg(1000);

void BM_SweepThmSquareSum(benchmark::State& state) {
  const auto& d = catri::find_identity("thm-square-sum");
  catri::VerifyOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  auto ranges = catri::default_ranges(d, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catri::verify_identity(d, ranges, options));
}
BENCHMARK(BM_SweepThmSquareSum)->Args({50, 1})->Args({100, 1})->Args({100, 4});

void BM_ScanDivisibilityC(benchmark::State& state) {
  catri::ScanOptions options;
  const auto m = state.range(1);
  catri::RangeMap domain{{"m", {2, m}}, {"n", {1, m - 1}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        catri::scan_divisibility(catri::Conjecture::kDivisibilityC, state.range(0), domain, options));
  }
}
BENCHMARK(BM_ScanDivisibilityC)->Args({5, 40})->Args({7, 40})->Args({7, 100});

void BM_MixedCube(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(catri::check_mixed_cube(n, n + 3));
}
BENCHMARK(BM_MixedCube)->Arg(12)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
