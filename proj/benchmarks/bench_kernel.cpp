#include <benchmark/benchmark.h>

#include "dirichlet/kernel.hpp"

namespace {

void BM_DirichletKernel(benchmark::State& state) {
  const dirichlet::KernelOrder n{state.range(0)};
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet::dirichlet_kernel(n, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_DirichletKernel)->Arg(10)->Arg(1000)->Arg(1'000'000);

void BM_CosineSum(benchmark::State& state) {
  const dirichlet::KernelOrder n{state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::cosine_sum(n, 0.37));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CosineSum)->RangeMultiplier(10)->Range(10, 10'000)->Complexity(benchmark::oN);

void BM_KernelMean(benchmark::State& state) {
  const dirichlet::KernelOrder n{state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::kernel_mean(n));
}
BENCHMARK(BM_KernelMean)->Arg(10)->Arg(50)->Arg(500);

}  // namespace
