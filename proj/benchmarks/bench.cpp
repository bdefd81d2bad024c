#include <benchmark/benchmark.h>

#include "regembed/autgroup.hpp"
#include "regembed/coherent.hpp"
#include "regembed/isometry.hpp"
#include "regembed/predistance.hpp"
#include "regembed/spectral.hpp"
#include "regembed/twin_reduce.hpp"

namespace {

using namespace regembed;

Multigraph cycle(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

// Outer 5-cycle, inner pentagram, spokes.
Multigraph petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

void BM_AutomorphismsPetersen(benchmark::State& state) {
  Multigraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order());
}
BENCHMARK(BM_AutomorphismsPetersen);

void BM_AutomorphismsCycle(benchmark::State& state) {
  Multigraph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order());
}
BENCHMARK(BM_AutomorphismsCycle)->DenseRange(6, 12, 2);

void BM_TwinFactorization(benchmark::State& state) {
  Multigraph g = complete_bipartite(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(factorize_aut_order(g).total);
}
BENCHMARK(BM_TwinFactorization);

void BM_GraphDistancePredistance(benchmark::State& state) {
  Multigraph g = petersen();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_predistance(g, PredistanceKind::graph_distance));
}
BENCHMARK(BM_GraphDistancePredistance);

void BM_EmbedPetersen(benchmark::State& state) {
  Multigraph g = petersen();
  Predistance p = build_predistance(g, PredistanceKind::adjacency);
  for (auto _ : state) {
    Embedding e = embed(p, ShiftMode::low);
    benchmark::DoNotOptimize(e.points.data());
  }
}
BENCHMARK(BM_EmbedPetersen);

void BM_IsometryGroupPetersen(benchmark::State& state) {
  Multigraph g = petersen();
  Embedding e = embed(build_predistance(g, PredistanceKind::adjacency), ShiftMode::low);
  for (auto _ : state)
    benchmark::DoNotOptimize(distance_preserving_permutations(e.points).order());
}
BENCHMARK(BM_IsometryGroupPetersen);

void BM_VerifyRegularPetersen(benchmark::State& state) {
  Multigraph g = petersen();
  Predistance p = build_predistance(g, PredistanceKind::adjacency);
  Embedding e = embed(p, ShiftMode::low);
  for (auto _ : state) {
    RegularityCertificate cert = verify_regular(g, p, e);
    benchmark::DoNotOptimize(cert.groups_equal);
  }
}
BENCHMARK(BM_VerifyRegularPetersen);

void BM_CoherentBasisPetersen(benchmark::State& state) {
  Multigraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(coherent_basis(g).class_count());
}
BENCHMARK(BM_CoherentBasisPetersen);

void BM_MakeReconstructing(benchmark::State& state) {
  Multigraph g = cycle(9);
  CoherentBasis basis = coherent_basis(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(make_reconstructing(basis, g).matrix.max_abs());
}
BENCHMARK(BM_MakeReconstructing);

}  // namespace

BENCHMARK_MAIN();
