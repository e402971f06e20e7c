// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>

#include "rkbch/expm.hpp"
#include "rkbch/fock_oracle.hpp"
#include "rkbch/kernels.hpp"
#include "rkbch/sweep.hpp"

namespace {

using namespace rkbch;

ComplexMatrix test_matrix(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Complex(std::sin(0.37 * static_cast<double>(i * n + j)),
                        std::cos(0.11 * static_cast<double>(i + 3 * j)));
  return m;
}

void BM_Gemm(benchmark::State& state, Backend backend) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = test_matrix(n);
  const ComplexMatrix b = test_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b, backend));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK_CAPTURE(BM_Gemm, serial, Backend::kSerial)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK_CAPTURE(BM_Gemm, parallel, Backend::kParallel)->RangeMultiplier(2)->Range(32, 256);

void BM_GibbsForm(benchmark::State& state, Backend backend) {
  const FockSystem f(static_cast<std::size_t>(state.range(0)), 1.0);
  const GibbsParams g{0.96, {0.0956, 0.0}, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(gibbs_form(f, g, backend));
}
BENCHMARK_CAPTURE(BM_GibbsForm, serial, Backend::kSerial)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(BM_GibbsForm, parallel, Backend::kParallel)->Arg(64)->Arg(128);

void BM_Sweep(benchmark::State& state, Backend backend) {
  GridSpec spec;
  spec.betas = {0.1, 0.5, 1.0, 2.0, 3.0};
  spec.gamma_abs = {0.0, 0.1, 0.5, 1.0};
  spec.gamma_arg = {0.0, M_PI / 3, M_PI / 2, M_PI};
  spec.hbar_omegas = {0.5, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, backend));
}
BENCHMARK_CAPTURE(BM_Sweep, serial, Backend::kSerial);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Backend::kParallel);

}  // namespace

BENCHMARK_MAIN();
