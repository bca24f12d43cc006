#include <benchmark/benchmark.h>

#include "lspan/generators.hpp"
#include "lspan/mst.hpp"
#include "lspan/pipeline.hpp"
#include "lspan/verify.hpp"

namespace {

using namespace lspan;

// Edge count is the argument; n = m / 10 as in the runtime trend check.
void BM_GeneralPipeline(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  WeightedGraph g = random_connected_graph(m / 10, m, 1.0, 1000.0, 1);
  PipelineConfig c;
  c.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(light_spanner_general(g, c).edges.size());
  state.SetComplexityN(m);
}
BENCHMARK(BM_GeneralPipeline)->Arg(10000)->Arg(20000)->Arg(40000)->Arg(80000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_MinorFreePipeline(benchmark::State& state) {
  WeightedGraph g = planar_triangulation(static_cast<int>(state.range(0)), 1);
  PipelineConfig c;
  c.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(light_spanner_minor_free(g, c).edges.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinorFreePipeline)->Arg(1000)->Arg(2000)->Arg(4000)->Arg(8000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EuclideanPipeline(benchmark::State& state) {
  PointSet p = uniform_points(static_cast<int>(state.range(0)), 2, 1);
  PipelineConfig c;
  c.mode = Mode::Euclidean;
  c.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(light_spanner_geometric(p, c).edges.size());
}
BENCHMARK(BM_EuclideanPipeline)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Mst(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  WeightedGraph g = random_connected_graph(m / 10, m, 1.0, 1000.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_mst(g).size());
  state.SetComplexityN(m);
}
BENCHMARK(BM_Mst)->Arg(10000)->Arg(40000)->Arg(160000)->Arg(640000)->Unit(benchmark::kMicrosecond)->Complexity();

void BM_MeasureStretch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  WeightedGraph g = random_connected_graph(m / 10, m, 1.0, 1000.0, 3);
  PipelineConfig c;
  c.verify = false;
  std::vector<EdgeId> h = light_spanner_general(g, c).edges;
  for (auto _ : state) benchmark::DoNotOptimize(measure_stretch(g, h).maxStretch);
}
BENCHMARK(BM_MeasureStretch)->Arg(5000)->Arg(10000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_GreedySpanner(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  WeightedGraph g = random_connected_graph(m / 10, m, 1.0, 1000.0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_spanner(g, 3.0).size());
}
BENCHMARK(BM_GreedySpanner)->Arg(2500)->Arg(5000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
