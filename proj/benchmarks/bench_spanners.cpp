#include <benchmark/benchmark.h>

#include "orspan/orspan.hpp"

using namespace orspan;

static void BM_Greedy1ppb(benchmark::State& state) {
  const PointSet p = random_sorted_line(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_1ppb(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Greedy1ppb)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oNLogN);

static void BM_Dilation1ppb(benchmark::State& state) {
  const OneppbGraph g = greedy_1ppb(random_sorted_line(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(dilation_1ppb(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dilation1ppb)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

static void BM_OrientedDilation(benchmark::State& state) {
  const OneppbGraph g = greedy_1ppb(random_sorted_line(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(oriented_dilation(g.graph()));
}
BENCHMARK(BM_OrientedDilation)->Arg(50)->Arg(200)->Arg(800);

static void BM_Optimal1ppb(benchmark::State& state) {
  const PointSet p = random_sorted_line(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_1ppb(p));
}
BENCHMARK(BM_Optimal1ppb)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_OrientComplete(benchmark::State& state) {
  const PointSet p = random_plane(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(orient_complete(p));
}
BENCHMARK(BM_OrientComplete)->Arg(10)->Arg(25)->Arg(50);

static void BM_GreedyTriangulationConvex(benchmark::State& state) {
  const PointSet p = random_convex(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(consistent_orientation(greedy_triangulation(p)));
}
BENCHMARK(BM_GreedyTriangulationConvex)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK_MAIN();
