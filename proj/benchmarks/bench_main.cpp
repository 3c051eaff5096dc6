#include <benchmark/benchmark.h>

#include "holoroot/detres.hpp"
#include "holoroot/oracle.hpp"
#include "holoroot/taylor.hpp"
#include "holoroot/weyl.hpp"

using namespace holoroot;

static void BM_BuildTable(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto order = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(k, order));
}
BENCHMARK(BM_BuildTable)->ArgsProduct({{2, 3, 5}, {8, 16}});

static void BM_RootSeries(benchmark::State& state) {
  const CoeffTable t = build_table(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(root_series(t));
}
BENCHMARK(BM_RootSeries)->DenseRange(2, 5);

static void BM_Discriminant(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(k));
}
BENCHMARK(BM_Discriminant)->DenseRange(2, 5);

static void BM_LemmaDeterminant(benchmark::State& state) {
  const PolyMatrix m = lemma_determinant_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_LemmaDeterminant)->DenseRange(2, 5);

static void BM_ComposeGenerators(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const DiffOp u1 = gen_U1(k), um1 = gen_Um1(k);
  for (auto _ : state) benchmark::DoNotOptimize(u1 * um1 - um1 * u1);
}
BENCHMARK(BM_ComposeGenerators)->DenseRange(2, 6);

static void BM_AnnihilationResiduals(benchmark::State& state) {
  const CoeffTable t = build_table(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(annihilation_residuals(t));
}
BENCHMARK(BM_AnnihilationResiduals)->DenseRange(2, 4);

static void BM_NewtonRoot(benchmark::State& state) {
  const ShiftedPolynomial<> p{4, {{0.01, 0}, {-0.02, 0}, {0.015, 0}, {0.03, 0}}};
  for (auto _ : state) benchmark::DoNotOptimize(newton_root(p));
}
BENCHMARK(BM_NewtonRoot);
BENCHMARK_MAIN();
