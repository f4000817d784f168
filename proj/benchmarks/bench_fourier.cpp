#include <benchmark/benchmark.h>

#include "dirichlet/fourier.hpp"

namespace {

using dirichlet::kPi;
namespace p = dirichlet::primitive;

const dirichlet::PiecewiseFunction& sawtooth() {
  static const dirichlet::PiecewiseFunction f(
      {dirichlet::MonotoneSegment(-kPi, kPi, p::Affine{1.0, 0.0})});
  return f;
}

const dirichlet::PiecewiseFunction& square_wave() {
  static const dirichlet::PiecewiseFunction f(
      {dirichlet::MonotoneSegment(-kPi, 0.0, p::Constant{-1.0}),
       dirichlet::MonotoneSegment(0.0, kPi, p::Constant{1.0})});
  return f;
}

void BM_Coefficients(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::coefficients(sawtooth(), n));
}
BENCHMARK(BM_Coefficients)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_PartialSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = dirichlet::coefficients(sawtooth(), n);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::partial_sum(c, 1.0, n));
}
BENCHMARK(BM_PartialSum)->Arg(10)->Arg(1000);

void BM_PartialSumKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet::partial_sum_kernel(square_wave(), 0.5, n));
  }
}
BENCHMARK(BM_PartialSumKernel)->Arg(10)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_SplitIntegrals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet::split_integrals(square_wave(), 0.5, n));
  }
}
BENCHMARK(BM_SplitIntegrals)->Arg(10)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);

}  // namespace
