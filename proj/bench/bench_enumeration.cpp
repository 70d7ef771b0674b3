// Serial reference versus the OpenMP path of enumerate_quasi_affine.

#include <benchmark/benchmark.h>

#include "quandle/enumeration.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(quandle::enumerate_quasi_affine_serial(n).total());
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(quandle::enumerate_quasi_affine(n, 0).total());
}

void BM_CountTableSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(quandle::count_table(15, 1).quasi_affine.back());
}

void BM_CountTableParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(quandle::count_table(15, 0).quasi_affine.back());
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(12)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(12)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTableParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
