#include <benchmark/benchmark.h>

#include <cmath>

#include "dirichlet/oscillatory.hpp"

namespace {

void BM_Decompose(benchmark::State& state) {
  const dirichlet::Frequency i{static_cast<double>(state.range(0))};
  const auto f = [](double b) { return std::exp(-b); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet::decompose(f, i, dirichlet::kPi / 2));
  }
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(100)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMicrosecond);

void BM_Tail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::tail(n));
}
BENCHMARK(BM_Tail)->Arg(50)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SineBlock(benchmark::State& state) {
  const int nu = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::sine_block(nu));
}
BENCHMARK(BM_SineBlock)->Arg(1)->Arg(100)->Arg(10'000);

}  // namespace
