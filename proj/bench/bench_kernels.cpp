// Serial reference versus OpenMP for the heavy kernels. The argument is 0
// for the serial path and 1 for the parallel one.

#include <benchmark/benchmark.h>

#include "knotcocycle/cocycles.hpp"
#include "knotcocycle/rotation.hpp"

using namespace kc;

namespace {

void BM_CubeMeridians(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cube_meridians(1, state.range(0)));
}
BENCHMARK(BM_CubeMeridians)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CubeEquations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_equations(3, state.range(0)));
}
BENCHMARK(BM_CubeEquations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RrefTrivialRows(benchmark::State& state) {
  const SparseMatrix& m = degree_system(3).trivial;
  for (auto _ : state) benchmark::DoNotOptimize(rref(m, state.range(0)));
}
BENCHMARK(BM_RrefTrivialRows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RotLoopTrefoil(benchmark::State& state) {
  const PolyKnot k = perturbed(long_knot(trefoil_polygon(90)), 1, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(rot_loop(k, 1024, state.range(0)));
}
BENCHMARK(BM_RotLoopTrefoil)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
