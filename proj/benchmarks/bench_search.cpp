#include <benchmark/benchmark.h>

#include "fratio/search.hpp"

using namespace fratio;

namespace {

void BM_EnumerateSmall(benchmark::State& state) {
  SearchBounds b{int64_t(state.range(0)), 3, 2, std::nullopt};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_integral(b));
  }
}
BENCHMARK(BM_EnumerateSmall)->Arg(8)->Arg(12);

void BM_EnumerateChebyshevBounds(benchmark::State& state) {
  SearchBounds b{30, 5, 1, std::nullopt};
  int jobs = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_integral(b, jobs));
  }
}
BENCHMARK(BM_EnumerateChebyshevBounds)->Arg(1)->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace
