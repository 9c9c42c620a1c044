#include <benchmark/benchmark.h>

#include "rba/contract.hpp"
#include "rba/region_model.hpp"

namespace {

std::vector<rba::Element> sample_regions(int count) {
  rba::RegionAlgebra m = rba::interval_model();
  rba::SampleStream rng(1234);
  std::vector<rba::Element> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(m.sample(rng));
  return out;
}

void BM_IntervalMeet(benchmark::State& state) {
  rba::RegionAlgebra m = rba::interval_model();
  auto regions = sample_regions(64);
  std::size_t i = 0;
  for (auto _ : state) {
    auto r = m.meet(regions[i % 64], regions[(i + 17) % 64]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_IntervalMeet);

void BM_IntervalComplement(benchmark::State& state) {
  rba::RegionAlgebra m = rba::interval_model();
  auto regions = sample_regions(64);
  std::size_t i = 0;
  for (auto _ : state) {
    auto r = m.complement(regions[i % 64]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_IntervalComplement);

void BM_IntervalContact(benchmark::State& state) {
  rba::RegionAlgebra m = rba::interval_model();
  auto regions = sample_regions(64);
  std::size_t i = 0;
  for (auto _ : state) {
    bool r = m.contact(regions[i % 64], regions[(i + 31) % 64]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_IntervalContact);

}  // namespace
