#include "flatkern/presets.hpp"

#include <benchmark/benchmark.h>

using namespace flatkern;

namespace {

void BM_GoldenEnumeration(benchmark::State& state) {
  SearchSpec spec;
  spec.base = prym_base_prediagram();
  spec.involution = prym_base_involution();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(spec));
}
BENCHMARK(BM_GoldenEnumeration)->Unit(benchmark::kMillisecond);

void BM_AllInvolutionEnumeration(benchmark::State& state) {
  SearchSpec spec;
  spec.base = prym_base_prediagram();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(spec));
}
BENCHMARK(BM_AllInvolutionEnumeration)->Unit(benchmark::kMillisecond);

void BM_KFull(benchmark::State& state) {
  auto s = build_preset("prym1111-s5").surface("golden-irrational");
  for (auto _ : state) benchmark::DoNotOptimize(isoperiodic_twist_space(s));
}
BENCHMARK(BM_KFull)->Unit(benchmark::kMicrosecond);

void BM_MinimalDeformations(benchmark::State& state) {
  auto s = build_preset("prym1111-s1").surface("golden-irrational");
  auto k = isoperiodic_twist_space(s);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_deformations(k, s.diagram.d, s.m()));
}
BENCHMARK(BM_MinimalDeformations)->Unit(benchmark::kMicrosecond);

void BM_PrymScan(benchmark::State& state) {
  auto s = build_preset("prym1111-s3").surface("golden-irrational");
  for (auto _ : state) benchmark::DoNotOptimize(find_prym_involutions(s));
}
BENCHMARK(BM_PrymScan)->Unit(benchmark::kMicrosecond);

void BM_StablePrediagrams(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stable_prediagrams({1, 1, 1, 1}));
}
BENCHMARK(BM_StablePrediagrams)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
