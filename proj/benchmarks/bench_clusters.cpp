#include <benchmark/benchmark.h>

#include "rba/duality.hpp"
#include "rba/finite_algebra.hpp"

namespace {

rba::FiniteContactStructure chain_structure(int atoms) {
  std::vector<std::vector<bool>> adj(atoms, std::vector<bool>(atoms, false));
  for (int i = 0; i < atoms; ++i) {
    adj[i][i] = true;
    if (i + 1 < atoms) adj[i][i + 1] = adj[i + 1][i] = true;
  }
  return rba::make_finite_lca(atoms, adj);
}

void BM_EnumerateClusters(benchmark::State& state) {
  auto s = chain_structure(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cs = rba::enumerate_clusters(*s.algebra, rba::ClusterMode::brute,
                                      rba::ContactChoice::alexandroff);
    benchmark::DoNotOptimize(cs.clusters);
  }
}
BENCHMARK(BM_EnumerateClusters)->DenseRange(2, 4);

void BM_Dualize(benchmark::State& state) {
  auto s = chain_structure(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = rba::dualize(s.algebra);
    benchmark::DoNotOptimize(d.lambda_full);
  }
}
BENCHMARK(BM_Dualize)->DenseRange(2, 4);

}  // namespace
