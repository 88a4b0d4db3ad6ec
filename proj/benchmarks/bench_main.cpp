#include <benchmark/benchmark.h>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/hausdorff.hpp"
#include "lieweyl/star.hpp"

using namespace lieweyl;

static void BM_PhiSymmetric(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(phi_symmetric(L, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhiSymmetric)->DenseRange(2, 8, 2);

static void BM_CoproductTrees(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(coproduct_trees_table(L, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CoproductTrees)->DenseRange(2, 6);

static void BM_CoproductAdjoint(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  int P = static_cast<int>(state.range(0));
  SeriesMatrix phi = phi_symmetric(L, P);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct_adjoint_table(L, phi, P));
}
BENCHMARK(BM_CoproductAdjoint)->DenseRange(2, 6);

static void BM_DynkinD(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(dynkin_D(L, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DynkinD)->DenseRange(2, 7);

static void BM_BchOracle(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(bch_oracle(L, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BchOracle)->DenseRange(2, 6);

static void BM_PbwWordStraightening(benchmark::State& state) {
  LieAlgebra L = su2_algebra();
  std::vector<int> letters;
  for (int i = 0; i < state.range(0); ++i) letters.push_back(2 - i % 3);
  for (auto _ : state) {
    Envelope env(L);  // fresh cache each round
    benchmark::DoNotOptimize(env.word(letters));
  }
}
BENCHMARK(BM_PbwWordStraightening)->DenseRange(2, 10, 2);

static void BM_StarRoutes(benchmark::State& state) {
  LieAlgebra L = kappa_algebra({1, 0, 0});
  int d = static_cast<int>(state.range(0));
  Polynomial f = x_var(3, 0), g = x_var(3, 1);
  for (int i = 1; i < d; ++i) {
    f *= x_var(3, i % 3);
    g *= x_var(3, (i + 2) % 3);
  }
  SeriesMatrix phi = phi_symmetric(L, 2 * d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_pbw(L, phi, f, g));
    benchmark::DoNotOptimize(star_coproduct(L, phi, f, g));
  }
}
BENCHMARK(BM_StarRoutes)->DenseRange(1, 3);

static void BM_OrderedTreeEnumeration(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ordered(w, 1));
}
BENCHMARK(BM_OrderedTreeEnumeration)->DenseRange(2, 5);
BENCHMARK_MAIN();
