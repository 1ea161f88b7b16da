// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "appell/sieve.hpp"
#include "appell/sptcrank.hpp"

namespace {

using namespace appell;

void BM_BuildTableSerial(benchmark::State &state) {
  const Params p(1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_table_serial(p, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BuildTableParallel(benchmark::State &state) {
  const Params p(1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_table(p, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FordHSerial(benchmark::State &state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ford_H_serial(x, Rational(100), Rational(400)));
}

void BM_FordHParallel(benchmark::State &state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ford_H(x, Rational(100), Rational(400)));
}

void BM_BivariateReference(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bivariate_expand_reference(SptKind::C1, state.range(0)));
}

void BM_BivariateIncremental(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bivariate_expand(SptKind::C1, state.range(0)));
}

} // namespace

BENCHMARK(BM_BuildTableSerial)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTableParallel)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FordHSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FordHParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BivariateReference)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BivariateIncremental)->Arg(16)->Arg(24)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
