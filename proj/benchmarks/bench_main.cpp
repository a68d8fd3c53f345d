#include <benchmark/benchmark.h>

#include "pytri/descartes.hpp"
#include "pytri/packing.hpp"
#include "pytri/tree.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto method = static_cast<pytri::TreeMethod>(state.range(1));
  const pytri::Integer max_c(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pytri::enumerate(max_c, method));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{1000, 100000}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_PackingGenerate(benchmark::State& state) {
  const pytri::Seed seed = pytri::seed_packing(pytri::PythTriple::make(3, 4, 5));
  const pytri::Integer bound(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pytri::generate(seed, bound));
}
BENCHMARK(BM_PackingGenerate)->Arg(100)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_ReduceToRoot(benchmark::State& state) {
  // climb away from the root, then time the walk back
  pytri::IntQuadruple k{-3, 4, 12, 13};
  for (int i = 0; i < state.range(0); ++i) k = pytri::reflect(k, static_cast<std::size_t>(1 + i % 3));
  for (auto _ : state) benchmark::DoNotOptimize(pytri::reduce_to_root(k));
}
BENCHMARK(BM_ReduceToRoot)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
