#include <benchmark/benchmark.h>

#include <random>

#include "swb/arrangement.hpp"

using namespace swb;

static void BM_RowReduce(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> c(-5, 5);
  std::uniform_int_distribution<std::size_t> col(0, dim - 1);
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::map<std::size_t, Rational> r;
    for (int k = 0; k < 6; ++k)
      if (int v = c(rng); v != 0) r[col(rng)] = v;
    rows.emplace_back(r.begin(), r.end());
  }
  for (auto _ : state) {
    RowReducer red(dim);
    for (const auto& r : rows) red.insert(r);
    benchmark::DoNotOptimize(std::move(red).finish());
  }
  state.SetComplexityN(state.range(0));
}
// Random rows fill in and their rationals grow; keep these small.
BENCHMARK(BM_RowReduce)->RangeMultiplier(2)->Range(16, 128)->Complexity();

// Shifted copies of a few short generators, the shape jd_slice feeds in.
static void BM_RowReduceBanded(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i + 3 < dim; ++i) {
    rows.push_back({{i, Rational(1)}, {i + 1, Rational(-2)}, {i + 2, Rational(1)}});
    rows.push_back({{i, Rational(1)}, {i + 3, Rational(-1)}});
  }
  for (auto _ : state) {
    RowReducer red(dim);
    for (const auto& r : rows) red.insert(r);
    benchmark::DoNotOptimize(std::move(red).finish());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RowReduceBanded)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_JdSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const PolyRing ring = type_a_ring(n);
  for (auto _ : state) benchmark::DoNotOptimize(jd_slice(ring, d, 3, 3));
}
BENCHMARK(BM_JdSlice)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_OracleSlice(benchmark::State& state) {
  const PolyRing ring = type_a_ring(3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_slice(ring, 2, 3, 3));
}
BENCHMARK(BM_OracleSlice)->Unit(benchmark::kMillisecond);

static void BM_Catalan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan_quotient(n));
}
BENCHMARK(BM_Catalan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LaurentJd(benchmark::State& state) {
  const RootDatum rd = build_root_datum("A2");
  WindowPolicy p{Window::cube(2, -1, 1), std::nullopt, 2, 6};
  for (auto _ : state) benchmark::DoNotOptimize(jd_slice(rd, 1, Bidegree::homological(2), p));
}
BENCHMARK(BM_LaurentJd)->Unit(benchmark::kMillisecond);
