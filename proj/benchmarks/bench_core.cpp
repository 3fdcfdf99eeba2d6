#include <benchmark/benchmark.h>

#include <random>

#include "lrc3/code.hpp"
#include "lrc3/constructions.hpp"
#include "lrc3/gf3.hpp"
#include "lrc3/locality.hpp"
#include "lrc3/oracle.hpp"

using namespace lrc3;

namespace {

Gf3Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Gf3Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, uint8_t(rng() % 3));
  return m;
}

void BM_Rank(benchmark::State& state) {
  std::mt19937 rng(1);
  const std::size_t n = (std::size_t)state.range(0);
  Gf3Matrix m = random_matrix(rng, n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_MinDistanceEnumeration(benchmark::State& state) {
  LinearCode c = LinearCode::from_parity_check(extended_qr12_parity());
  for (auto _ : state)
    benchmark::DoNotOptimize(min_distance(c, DistanceStrategy::kEnumeration));
}
BENCHMARK(BM_MinDistanceEnumeration);

void BM_MinDistanceColumnSearch(benchmark::State& state) {
  LinearCode c = LinearCode::from_parity_check(extended_qr12_parity());
  for (auto _ : state)
    benchmark::DoNotOptimize(min_distance(c, DistanceStrategy::kColumnSearch));
}
BENCHMARK(BM_MinDistanceColumnSearch);

void BM_CodeLocality(benchmark::State& state) {
  LinearCode c = class8();
  for (auto _ : state) benchmark::DoNotOptimize(code_locality(c).code_locality);
}
BENCHMARK(BM_CodeLocality);

void BM_OracleThroughput(benchmark::State& state) {
  // full scan of the 3^9 systematic [6,3] space per iteration
  SearchTask t;
  t.n = 6;
  t.k = 3;
  t.r = 2;
  t.target_d = 3;
  t.mode = SearchTask::Mode::kCountAll;
  uint64_t examined = 0;
  for (auto _ : state) {
    SearchResult res = exists_optimal_lrc(t);
    examined += res.examined;
    benchmark::DoNotOptimize(res.witness_count);
  }
  state.SetItemsProcessed((int64_t)examined);
}
BENCHMARK(BM_OracleThroughput);

}  // namespace

BENCHMARK_MAIN();
