// Serial reference kernels against their OpenMP and FFT counterparts.

#include "khup/continuous.hpp"
#include "khup/finite_up.hpp"
#include "khup/grid.hpp"
#include "khup/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace khup;

namespace {

ComplexVector input(std::size_t n) {
  std::mt19937_64 rng(1);
  return random_gaussian_vector(n, rng);
}

void dft(benchmark::State& state, DftMethod method) {
  const auto v = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(centered_dft(v, -1, method));
  state.SetComplexityN(state.range(0));
}

void trials(benchmark::State& state, Execution ex) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = fourier_matrix(FiniteAbelianGroup({static_cast<int>(n)}));
  const auto cert = certify_k_hadamard(a);
  for (auto _ : state) {
    auto reports = run_trials(256, 7, ex, [&](std::mt19937_64& rng, std::size_t) {
      return norm_up_check(a, cert, random_test_vector(n, rng), NormIndex(3));
    });
    benchmark::DoNotOptimize(reports);
  }
  state.SetItemsProcessed(state.iterations() * 256);
}

void lct(benchmark::State& state, DftMethod method) {
  const auto f = random_smooth_function(3, static_cast<std::size_t>(state.range(0)), 8);
  const LCTParams m{1, 2, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(lct_apply(m, f, method));
}

}  // namespace

BENCHMARK_CAPTURE(dft, serial, DftMethod::Direct)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(dft, openmp, DftMethod::DirectParallel)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(dft, fft, DftMethod::Fft)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(lct, serial, DftMethod::Direct)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lct, openmp, DftMethod::DirectParallel)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lct, fft, DftMethod::Fft)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(trials, serial, Execution::Serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(trials, openmp, Execution::Parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
