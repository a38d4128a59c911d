#include <benchmark/benchmark.h>

#include "grouptope/autengine.hpp"
#include "grouptope/frucht.hpp"
#include "grouptope/polytope.hpp"

namespace {

grouptope::Graph cycle(int n) {
  std::vector<grouptope::NodePair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return grouptope::Graph(n, std::move(edges));
}

void BM_Skeleton(benchmark::State& state) {
  auto g = grouptope::augment(cycle(static_cast<int>(state.range(0))));
  auto p = grouptope::BinaryPolytope::from_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(grouptope::skeleton(p));
}
BENCHMARK(BM_Skeleton)->Arg(6)->Arg(12)->Arg(24);

void BM_SkeletonAut(benchmark::State& state) {
  auto g = grouptope::augment(cycle(static_cast<int>(state.range(0))));
  auto s = grouptope::skeleton(grouptope::BinaryPolytope::from_graph(g));
  for (auto _ : state) benchmark::DoNotOptimize(grouptope::automorphism_group(s));
}
BENCHMARK(BM_SkeletonAut)->Arg(6)->Arg(12);

void BM_Frucht(benchmark::State& state) {
  auto g = grouptope::realize_group(grouptope::parse_group_spec("dihedral 4"));
  for (auto _ : state) benchmark::DoNotOptimize(grouptope::frucht_graph(g));
}
BENCHMARK(BM_Frucht);

void BM_Combinatorial(benchmark::State& state) {
  auto g = grouptope::augment(cycle(static_cast<int>(state.range(0))));
  auto p = grouptope::BinaryPolytope::from_graph(g);
  auto s = grouptope::skeleton(p);
  for (auto _ : state) benchmark::DoNotOptimize(grouptope::verify_combinatorial(p, s));
}
BENCHMARK(BM_Combinatorial)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
