#include <benchmark/benchmark.h>

#include "swb/curves.hpp"

using namespace swb;

static void BM_MsvAssemble(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(msv_assemble(curve_preset(3, 3)));
}
BENCHMARK(BM_MsvAssemble);

static void BM_SeriesExpand(benchmark::State& state) {
  const RationalSeries s = poincare_specialize(three_lines_reference());
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.expand_in("q", order));
}
BENCHMARK(BM_SeriesExpand)->Arg(6)->Arg(12)->Arg(24);

static void BM_BoxExpand(benchmark::State& state) {
  const RationalSeries s = three_lines_reference();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.expand({order, order}));
}
BENCHMARK(BM_BoxExpand)->Arg(6)->Arg(12);

static void BM_KnotCompare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(knot_compare(Link::T33));
}
BENCHMARK(BM_KnotCompare);

static void BM_QuotientTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quotient_series_table(3, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuotientTable)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
