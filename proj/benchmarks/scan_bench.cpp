#include <benchmark/benchmark.h>

#include "fibfield/fibgen.hpp"

namespace {

void BM_ScanIntegers(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibfield::selfreciprocal_scan(0, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_ScanIntegers)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScanModP(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fibfield::selfreciprocal_scan(static_cast<std::uint64_t>(state.range(0)), 1500, {threads}));
  }
}
BENCHMARK(BM_ScanModP)->Args({3, 1})->Args({3, 4})->Args({97, 1})->Args({97, 4})->Unit(benchmark::kMillisecond);

void BM_FibRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fibfield::fib_poly_recurrence(state.range(0)));
}
BENCHMARK(BM_FibRecurrence)->Arg(100)->Arg(1000);

void BM_FibBinomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fibfield::fib_poly_binomial(state.range(0)));
}
BENCHMARK(BM_FibBinomial)->Arg(100)->Arg(1000);

}  // namespace
