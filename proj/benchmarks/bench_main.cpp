#include <benchmark/benchmark.h>

#include "ucayley/cayley.hpp"
#include "ucayley/complex.hpp"
#include "ucayley/constructions.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/ring.hpp"

using namespace ucayley;

namespace {

const char* const kRings[] = {"M(2,GF(2))", "M(2,GF(3))", "M(3,GF(2))", "M(2,GF(4))", "M(2,Z(4))"};

void BM_MakeRing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_ring(kRings[state.range(0)]).unit_count());
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_MakeRing)->DenseRange(0, 4);

void BM_BuildGraph(benchmark::State& state) {
  const RingHandle r = make_ring(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(r).edge_count());
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_BuildGraph)->DenseRange(0, 4);

void BM_Determinant(benchmark::State& state) {
  const RingHandle f = make_ring("GF(3)");
  MatrixElem m(static_cast<unsigned>(state.range(0)));
  for (unsigned i = 0; i < m.size(); ++i) {
    for (unsigned j = 0; j < m.size(); ++j) m.at(i, j) = (i * 7 + j * 3 + 1) % 3;
  }
  for (auto _ : state) benchmark::DoNotOptimize(det(f, m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8, 2);

void BM_EnumerateMaximal(benchmark::State& state) {
  const char* spec = state.range(0) == 0 ? "M(2,GF(3))" : "M(2,Z(4))";
  const UGraph g = build_graph(make_ring(spec));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(collect_maximal_independent(g, {}, threads).sets.size());
  state.SetLabel(spec);
}
BENCHMARK(BM_EnumerateMaximal)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_IndependenceNumber(benchmark::State& state) {
  const UGraph g = build_graph(make_ring(kRings[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_IndependenceNumber)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GreedyFromD(benchmark::State& state) {
  const RingHandle r = make_ring("M(3,GF(2))");
  const UGraph g = build_graph(r);
  const VertexSet d = to_vertex_set(r, d_family(3, r.base()));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_extend(g, d).size());
}
BENCHMARK(BM_GreedyFromD);

void BM_Shelling(benchmark::State& state) {
  const Complex c = independence_complex(build_graph(make_ring("prod(Z(2),Z(2),Z(2))")));
  for (auto _ : state) benchmark::DoNotOptimize(find_shelling(c).order.size());
}
BENCHMARK(BM_Shelling);

}  // namespace
BENCHMARK_MAIN();
