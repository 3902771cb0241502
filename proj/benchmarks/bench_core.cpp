#include <benchmark/benchmark.h>

#include "g2s6/chern.hpp"

using namespace g2s6;

static void BM_ExactBracket(benchmark::State& state) {
  Rng rng(1);
  const auto x = random_exact_algebra_element(rng);
  const auto y = random_exact_algebra_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_ExactBracket);

static void BM_ExactDet(benchmark::State& state) {
  Rng rng(2);
  const auto m = random_matrix<Exact>(rng, state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_ExactDet)->Arg(3)->Arg(6)->Arg(7);

static void BM_StructureEquations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure_equations<Exact>());
}
BENCHMARK(BM_StructureEquations)->Unit(benchmark::kMillisecond);

static void BM_LiftPoint(benchmark::State& state) {
  Rng rng(3);
  const auto y = random_unit_vector(rng, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lift_point(y));
}
BENCHMARK(BM_LiftPoint)->Unit(benchmark::kMicrosecond);

static void BM_ChernPipeline(benchmark::State& state) {
  Rng rng(4);
  const auto p = sphere_point(random_unit_vector(rng, 7));
  for (auto _ : state) {
    const auto j = sample_compatible_J(p, {6, 0}, rng);
    benchmark::DoNotOptimize(theorem_witness(solve_rs(default_frame(j))));
  }
}
BENCHMARK(BM_ChernPipeline)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
