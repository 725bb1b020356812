// Microbenchmarks for the hot paths: identity scans, structure
// subloops, multiplication-group closures, extension building, and the
// order-16 census.
#include <benchmark/benchmark.h>

#include "extraloop/census.hpp"
#include "extraloop/extension.hpp"
#include "extraloop/fixtures.hpp"
#include "extraloop/multgroups.hpp"
#include "extraloop/structure.hpp"
#include "extraloop/sylow.hpp"

using namespace extraloop;

namespace {

const FiniteLoop& loop16() {
  static const FiniteLoop l = cayley_loop();
  return l;
}

const FiniteLoop& loop48() {
  static const FiniteLoop l = [] {
    FiniteLoop b = cayley_loop();
    std::vector<char> chi(16);
    for (int x = 0; x < 16; ++x) chi[x] = ((x & 7) <= 3) ? 0 : 1;
    return semidirect_by_character(b, 3, chi, "bench48");
  }();
  return l;
}

const FiniteLoop& loop512() {
  static const FiniteLoop l = example_512();
  return l;
}

void BM_identities_16(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_identities(loop16()));
}
BENCHMARK(BM_identities_16);

void BM_identities_48(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_identities(loop48()));
}
BENCHMARK(BM_identities_48);

void BM_identities_512(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_identities(loop512()));
}
BENCHMARK(BM_identities_512)->Unit(benchmark::kMillisecond);

void BM_nucleus_48(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nucleus(loop48()));
}
BENCHMARK(BM_nucleus_48);

void BM_associator_subloop_512(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(associator_subloop(loop512()));
}
BENCHMARK(BM_associator_subloop_512)->Unit(benchmark::kMillisecond);

void BM_rmlt_closure_16(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmlt(loop16()));
}
BENCHMARK(BM_rmlt_closure_16);

void BM_rmlt_closure_48(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rmlt(loop48()));
}
BENCHMARK(BM_rmlt_closure_48)->Unit(benchmark::kMillisecond);

void BM_inner_mapping_group_48(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(inner_mapping_group(loop48(), Side::right));
}
BENCHMARK(BM_inner_mapping_group_48)->Unit(benchmark::kMillisecond);

void BM_sylow_subloops_48(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sylow_subloops(loop48(), 2));
}
BENCHMARK(BM_sylow_subloops_48)->Unit(benchmark::kMillisecond);

void BM_build_512(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(example_512());
}
BENCHMARK(BM_build_512)->Unit(benchmark::kMillisecond);

void BM_census16(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census_order16());
}
BENCHMARK(BM_census16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
