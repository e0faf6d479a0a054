#include <benchmark/benchmark.h>

#include "fratio/decide.hpp"
#include "fratio/landau.hpp"
#include "fratio/params.hpp"

using namespace fratio;

namespace {

GammaVector chebyshev() {
  return GammaVector{{30, 1}, {15, -1}, {10, -1}, {6, -1}, {1, 1}};
}

void BM_TermChebyshev(benchmark::State& state) {
  GammaVector g = chebyshev();
  uint64_t n = uint64_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(term(g, n));
  }
}
BENCHMARK(BM_TermChebyshev)->Arg(10)->Arg(100)->Arg(1000);

void BM_LandauProfileChebyshev(benchmark::State& state) {
  GammaVector g = chebyshev();
  for (auto _ : state) {
    benchmark::DoNotOptimize(landau_profile(g));
  }
}
BENCHMARK(BM_LandauProfileChebyshev);

void BM_ValuationLandau(benchmark::State& state) {
  GammaVector g = chebyshev();
  for (auto _ : state) {
    int64_t total = 0;
    for (uint64_t n = 1; n <= 50; ++n) total += valuation_landau(g, n, 7);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ValuationLandau);

void BM_GammaToParams(benchmark::State& state) {
  GammaVector g = chebyshev();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_to_params(g));
  }
}
BENCHMARK(BM_GammaToParams);

void BM_DecideChebyshev(benchmark::State& state) {
  GammaVector g = chebyshev();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_algebraic(g));
  }
}
BENCHMARK(BM_DecideChebyshev);

}  // namespace
