#include <benchmark/benchmark.h>

#include "smoothorb/classification.hpp"
#include "smoothorb/enumeration.hpp"
#include "smoothorb/grassmann.hpp"
#include "smoothorb/polytope.hpp"

namespace {

using namespace smoothorb;

void BM_EnumerateRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_matroid(n, k, [&](const Matroid&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateRank)->Args({5, 2})->Args({6, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_ClassifyUniform(benchmark::State& state) {
  const Matroid m = uniform(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_ClassifyUniform)->Args({8, 1})->Args({8, 4})->Args({12, 6});

void BM_IsSimpleProduct(benchmark::State& state) {
  const Matroid m = direct_sum(direct_sum(uniform(4, 1), uniform(4, 3)), uniform(4, 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(m));
}
BENCHMARK(BM_IsSimpleProduct);

// Dense integer matrix with distinct small entries; every minor is generic.
PointMatrix vandermonde(int n, int k) {
  ComplexMatrix a(n, k);
  for (int r = 0; r < n; ++r) {
    long x = 1;
    for (int c = 0; c < k; ++c) {
      a(r, c) = GaussianRational(Rational(x), Rational(c % 2 == 0 ? 0 : r));
      x *= r + 2;
    }
  }
  return PointMatrix(a);
}

void BM_PlueckerElimination(benchmark::State& state) {
  const PointMatrix a = vandermonde(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(pluecker_by_elimination(a));
}
BENCHMARK(BM_PlueckerElimination)->Args({8, 3})->Args({12, 4})->Unit(benchmark::kMillisecond);

void BM_PlueckerExpansion(benchmark::State& state) {
  const PointMatrix a = vandermonde(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(pluecker_by_expansion(a));
}
BENCHMARK(BM_PlueckerExpansion)->Args({8, 3})->Args({12, 4})->Args({16, 4})->Unit(benchmark::kMillisecond);

void BM_Smoothness(benchmark::State& state) {
  const PointMatrix a = vandermonde(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness(a));
}
BENCHMARK(BM_Smoothness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
