#include <benchmark/benchmark.h>

#include "flatland/census.hpp"
#include "flatland/families.hpp"
#include "flatland/symmetry.hpp"

namespace {

flatland::Triangulation torus(int n, int k) {
  return flatland::construct_family(flatland::FamilySpec::T1(n, k)).complex;
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto t = torus(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(flatland::canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(12)->Arg(24)->Arg(40);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto t = torus(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(flatland::automorphism_group(t));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(12)->Arg(24)->Arg(40);

void BM_FindIsomorphismNegative(benchmark::State& state) {
  const auto a = torus(20, 4);
  const auto b = torus(20, 5);
  for (auto _ : state) benchmark::DoNotOptimize(flatland::find_isomorphism(a, b));
}
BENCHMARK(BM_FindIsomorphismNegative);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatland::enumerate_degree_regular(n));
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(11)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_ClassifyCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatland::classify_census(n));
}
BENCHMARK(BM_ClassifyCensus)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
