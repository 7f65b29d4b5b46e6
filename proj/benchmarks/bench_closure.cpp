#include <benchmark/benchmark.h>

#include <random>

#include "support/random.hpp"
#include "syncalg/closure.hpp"
#include "syncalg/format.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;

static void BM_Compose(benchmark::State& state) {
  for (auto _ : state) {
    unsigned acc = 0;
    for (Rel a : kAllRels) {
      for (Rel b : kAllRels) acc += compose(a, b).bits();
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Compose);

// Random chains of strict orders are satisfiable and need several passes.
static SyncMatrix ordered_chain(std::size_t n, std::mt19937& rng) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    entries.push_back({i, i + 1, (rng() & 1U) != 0 ? Rel::lt() : Rel::le()});
  }
  return SyncMatrix::from_entries(default_labels(n), entries);
}

static void BM_CloseChain(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto m = ordered_chain(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(close(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CloseChain)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_CloseRandom(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto m = syncalg::testing::random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(close(m));
}
BENCHMARK(BM_CloseRandom)->Arg(8)->Arg(16)->Arg(32);

static void BM_OracleMinimal(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ordered_chain(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::minimal(m, n + 1));
}
BENCHMARK(BM_OracleMinimal)->DenseRange(3, 6);

static void BM_Interchange(benchmark::State& state) {
  std::mt19937 rng(4);
  const auto report = close(syncalg::testing::random_matrix(rng, 16));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interchange_to_report(report_to_interchange(report)));
  }
}
BENCHMARK(BM_Interchange);

BENCHMARK_MAIN();
