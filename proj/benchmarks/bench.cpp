#include <benchmark/benchmark.h>

#include "zgcu/basis.hpp"
#include "zgcu/bass.hpp"
#include "zgcu/catalog.hpp"
#include "zgcu/central.hpp"
#include "zgcu/shoda.hpp"
#include "zgcu/subgroups.hpp"

namespace {

using namespace zgcu;

const char* const kGroups[] = {"dihedral:16", "quaternion:32", "abelian:4,8", "metacyclic:7,3,2", "symmetric:4"};

void BM_GroupRingProduct(benchmark::State& state) {
  const auto g = load_group("cyclic:" + std::to_string(state.range(0)));
  const auto u = bass_unit(g, 1, 3, multiplicative_order(3, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u * u);
}
BENCHMARK(BM_GroupRingProduct)->Arg(16)->Arg(32)->Arg(64);

void BM_SubgroupLattice(benchmark::State& state) {
  const auto g = load_group(kGroups[state.range(0)]);
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupLattice::compute(g).size());
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 4);

void BM_StrongShodaPairs(benchmark::State& state) {
  const auto g = load_group(kGroups[state.range(0)]);
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(strong_shoda_pairs(g).pairs.size());
}
BENCHMARK(BM_StrongShodaPairs)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Centralize(benchmark::State& state) {
  const auto g = load_group("dihedral:32");
  const Element r = parse_element(*g, "r");
  const auto series = subnormal_series(g, r);
  const auto u = bass_unit(g, r, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(central_product(series, u));
}
BENCHMARK(BM_Centralize);

void BM_CentralUnitBasis(benchmark::State& state) {
  const auto g = load_group(kGroups[state.range(0)]);
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(central_unit_basis(g).elements.size());
}
BENCHMARK(BM_CentralUnitBasis)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Independence(benchmark::State& state) {
  const auto g = load_group("cyclic:" + std::to_string(state.range(0)));
  const auto basis = central_unit_basis(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_independence(basis).status);
}
BENCHMARK(BM_Independence)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
