#include <benchmark/benchmark.h>

#include "ncode/census.hpp"
#include "ncode/circulant.hpp"

namespace {

void BM_CensusPlain(benchmark::State& state) {
  const ncode::Code code = ncode::circulant_code({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  ncode::CensusOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(ncode::enumerate_nrh(code, options).nrh_total);
  state.SetLabel("m^m index functions");
}
BENCHMARK(BM_CensusPlain)->Args({6, 3})->Args({7, 3})->Args({8, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_CensusPruned(benchmark::State& state) {
  const ncode::Code code = ncode::circulant_code({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  ncode::CensusOptions options;
  options.prune = true;
  options.workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::enumerate_nrh(code, options).nrh_total);
}
BENCHMARK(BM_CensusPruned)->Args({8, 3, 1})->Args({9, 3, 8})->Args({10, 5, 8})->Unit(benchmark::kMillisecond);

void BM_CensusBpmFilter(benchmark::State& state) {
  const ncode::Code code = ncode::circulant_code({static_cast<int>(state.range(0)), 2});
  ncode::CensusOptions options;
  options.filter = ncode::EndoClass::BPM;
  for (auto _ : state) benchmark::DoNotOptimize(ncode::enumerate_nrh(code, options).nrh_total);
}
BENCHMARK(BM_CensusBpmFilter)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IsNeural(benchmark::State& state) {
  const ncode::Code code = ncode::circulant_code({9, 3});
  const ncode::NeuralTester tester(code);
  const ncode::Endomorphism phi({1, 2, 3, 4, 5, 6, 7, 8, 0});
  for (auto _ : state) benchmark::DoNotOptimize(tester.is_neural(phi));
}
BENCHMARK(BM_IsNeural);

}  // namespace
