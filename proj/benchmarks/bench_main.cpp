#include <benchmark/benchmark.h>

#include "qk/classify.hpp"
#include "qk/decompose.hpp"
#include "qk/generators.hpp"
#include "qk/ideals.hpp"
#include "qk/verify.hpp"

namespace {

void BM_EnumerateIdealsPowerset(benchmark::State& state) {
  const auto q = qk::powerset(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qk::enumerate_ideals(q));
  state.counters["elements"] = static_cast<double>(q.size());
}
BENCHMARK(BM_EnumerateIdealsPowerset)->DenseRange(2, 8, 2);

void BM_Radical(benchmark::State& state) {
  const auto q = qk::lukasiewicz(static_cast<unsigned>(state.range(0)));
  const auto algo = static_cast<qk::RadicalAlgorithm>(state.range(1));
  const auto zero = qk::zero_ideal(q);
  for (auto _ : state) benchmark::DoNotOptimize(qk::radical(zero, algo));
}
BENCHMARK(BM_Radical)->ArgsProduct({{8, 32, 128}, {0, 1, 2}});

void BM_PrimaryDecomposition(benchmark::State& state) {
  const auto q = qk::powerset(static_cast<unsigned>(state.range(0)));
  const auto zero = qk::zero_ideal(q);
  for (auto _ : state) benchmark::DoNotOptimize(qk::primary_decomposition(zero));
}
BENCHMARK(BM_PrimaryDecomposition)->DenseRange(2, 6, 2);

void BM_RunSuiteAll(benchmark::State& state) {
  const auto q = qk::powerset(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qk::run_suite(q, qk::Suite::All));
}
BENCHMARK(BM_RunSuiteAll)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
