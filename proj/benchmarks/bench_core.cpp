#include <benchmark/benchmark.h>

#include "sctree/betti.hpp"
#include "sctree/construction.hpp"
#include "sctree/corpus.hpp"
#include "sctree/decomposability.hpp"
#include "sctree/ideal.hpp"

using namespace sctree;

namespace {

MonomialIdeal square_of_three_facet() { return power(cover_ideal(corpus::three_facet_tree()), 2); }

void BM_BuildHk(benchmark::State& state) {
  auto tree = corpus::four_facet_tree();
  std::vector<unsigned> k(tree.facet_count(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_H_k(tree, k));
}
BENCHMARK(BM_BuildHk)->DenseRange(1, 3);

void BM_VertexDecomposition(benchmark::State& state) {
  auto tree = corpus::four_facet_tree();
  auto hk = build_H_k(tree, std::vector<unsigned>(tree.facet_count(), static_cast<unsigned>(state.range(0))));
  DecompositionOptions o;
  o.max_vertices = 64;
  for (auto _ : state) benchmark::DoNotOptimize(find_vertex_decomposition(hk.graph, o));
}
BENCHMARK(BM_VertexDecomposition)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Betti(benchmark::State& state, BettiMethod method) {
  auto ideal = square_of_three_facet();
  BettiOptions o;
  o.method = method;
  o.max_polarized = 64;
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(ideal, Field::rationals(), o));
}
BENCHMARK_CAPTURE(BM_Betti, koszul, BettiMethod::Koszul)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Betti, hochster, BettiMethod::Hochster)->Unit(benchmark::kMillisecond);

void BM_ComponentwiseLinear(benchmark::State& state) {
  auto ideal = power(cover_ideal(corpus::four_facet_tree()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_componentwise_linear(ideal));
}
BENCHMARK(BM_ComponentwiseLinear)->Unit(benchmark::kMillisecond);

void BM_ConstructionRun(benchmark::State& state) {
  Construction con(corpus::five_facet_tree(), {1, 1, 1, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(con.run("LDLDLDLDLDLDLD"));
}
BENCHMARK(BM_ConstructionRun)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
