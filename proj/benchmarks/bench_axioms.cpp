#include <benchmark/benchmark.h>

#include "rba/axioms.hpp"
#include "rba/region_model.hpp"

namespace {

void BM_SampledLcaSuite(benchmark::State& state) {
  rba::RegionAlgebra m = rba::interval_model();
  auto samples = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto r = rba::check_axioms(m, rba::Suite::LCA,
                               rba::QuantifierStrategy::sampled(99, samples));
    benchmark::DoNotOptimize(r.verdicts);
  }
}
BENCHMARK(BM_SampledLcaSuite)->Arg(100)->Arg(400)->Arg(1000);

void BM_SampledCaSuiteNat(benchmark::State& state) {
  rba::RegionAlgebra m = rba::nat_model();
  for (auto _ : state) {
    auto r = rba::check_axioms(m, rba::Suite::CA, rba::QuantifierStrategy::sampled(99, 1000));
    benchmark::DoNotOptimize(r.verdicts);
  }
}
BENCHMARK(BM_SampledCaSuiteNat);

}  // namespace
