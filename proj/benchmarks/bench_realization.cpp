#include <benchmark/benchmark.h>

#include "ncode/arrangement.hpp"
#include "ncode/code_io.hpp"
#include "ncode/search.hpp"
#include "ncode/transform.hpp"

namespace {

ncode::Realization1D staircase(int n) {
  std::vector<ncode::Interval1D> intervals;
  for (int i = 0; i < n; ++i) {
    intervals.push_back(ncode::Interval1D::open(ncode::Rational(2 * i), ncode::Rational(2 * i + 3)));
  }
  return ncode::Realization1D(ncode::RealizationMode::Open, intervals);
}

void BM_CodeOf(benchmark::State& state) {
  const ncode::Realization1D u = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::code_of(u).size());
}
BENCHMARK(BM_CodeOf)->Arg(5)->Arg(20)->Arg(64);

void BM_OpenToClosed(benchmark::State& state) {
  const ncode::Realization1D u = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::open_to_closed(u).n());
}
BENCHMARK(BM_OpenToClosed)->Arg(5)->Arg(20);

void BM_SearchUnrealizable(benchmark::State& state) {
  const ncode::Code code = ncode::parse_compact(4, "1 2 3 1234");
  const auto mode = static_cast<ncode::RealizationMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::search_realization_1d(code, mode).has_value());
  state.SetLabel(std::string(ncode::to_string(mode)));
}
BENCHMARK(BM_SearchUnrealizable)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SearchFigure(benchmark::State& state) {
  const ncode::Code code = ncode::parse_compact(5, "3 5 12 13 14 45 123 124 145");
  ncode::SearchOptions options;
  options.cap = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncode::search_realization_1d(code, ncode::RealizationMode::Open, options).has_value());
  }
}
BENCHMARK(BM_SearchFigure)->Unit(benchmark::kMillisecond);

}  // namespace
