#include <benchmark/benchmark.h>

#include <random>

#include "fratio/bezout.hpp"
#include "fratio/cyclotomic.hpp"
#include "fratio/monodromy.hpp"
#include "fratio/params.hpp"

using namespace fratio;

namespace {

std::pair<IntPolynomial, IntPolynomial> chebyshev_pair() {
  GammaVector g{{30, 1}, {15, -1}, {10, -1}, {6, -1}, {1, 1}};
  return params_to_polynomials(gamma_to_params(g));
}

void BM_BezoutianDeg8(benchmark::State& state) {
  auto [p, q] = chebyshev_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bezoutian(p, q));
  }
}
BENCHMARK(BM_BezoutianDeg8);

void BM_ResultantDeg8(benchmark::State& state) {
  auto [p, q] = chebyshev_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(resultant(p, q));
  }
}
BENCHMARK(BM_ResultantDeg8);

void BM_InertiaDeg8(benchmark::State& state) {
  auto [p, q] = chebyshev_pair();
  SymmetricIntMatrix bez = bezoutian(p, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inertia(bez));
  }
}
BENCHMARK(BM_InertiaDeg8);

void BM_WindingDeg8(benchmark::State& state) {
  auto [p, q] = chebyshev_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(winding_degree(p, q));
  }
}
BENCHMARK(BM_WindingDeg8);

void BM_CharPolyCompanion(benchmark::State& state) {
  RationalMatrix c = companion_matrix(cyclotomic_polynomial(30));
  for (auto _ : state) {
    benchmark::DoNotOptimize(characteristic_polynomial(c));
  }
}
BENCHMARK(BM_CharPolyCompanion);

void BM_ElementOrderChebyshevB(benchmark::State& state) {
  GammaVector g{{30, 1}, {15, -1}, {10, -1}, {6, -1}, {1, 1}};
  CompanionPair pair = build_monodromy(gamma_to_params(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(element_order(pair.B, 100));
  }
}
BENCHMARK(BM_ElementOrderChebyshevB);

}  // namespace
