// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mobiusquad/baselines.hpp"
#include "mobiusquad/multivariate.hpp"
#include "mobiusquad/quadrature.hpp"
#include "mobiusquad/trig_approx.hpp"

using namespace mobiusquad;

namespace {

TransformedIntegrand abs_cubed_gaussian() {
  return {[](double x) { return std::abs(x) * x * x; }, gaussian_weight(1.0), MobiusMap(1.0)};
}

void BM_integrate(benchmark::State& state) {
  const TransformedIntegrand ti = abs_cubed_gaussian();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(ti, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_integrate)->RangeMultiplier(4)->Range(64, 16384);

void BM_nested_refine_to(benchmark::State& state) {
  const TransformedIntegrand ti = abs_cubed_gaussian();
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NestedState s(ti, 16);
    while (s.node_count() < target) s.refine(ti);
    benchmark::DoNotOptimize(s.estimate());
  }
}
BENCHMARK(BM_nested_refine_to)->RangeMultiplier(4)->Range(64, 16384);

void BM_dft_pow2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> samples(static_cast<std::size_t>(n));
  for (auto& v : samples) v = Complex(u(rng), u(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dft(samples));
  }
}
BENCHMARK(BM_dft_pow2)->RangeMultiplier(4)->Range(64, 65536);

void BM_korobov_search(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(korobov_search(n, 2, 2));
  }
}
BENCHMARK(BM_korobov_search)->RangeMultiplier(4)->Range(256, 4096);

void BM_gauss_hermite_rule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_hermite_rule(n));
  }
}
BENCHMARK(BM_gauss_hermite_rule)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
