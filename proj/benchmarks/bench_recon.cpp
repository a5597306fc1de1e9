#include <benchmark/benchmark.h>

#include <random>

#include "autorecon/families.hpp"
#include "autorecon/recon.hpp"

using namespace autorecon;

namespace {

void BM_ReconstructCrab(benchmark::State& state) {
  const auto f = worked_example_crab();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_hidden(f));
}
BENCHMARK(BM_ReconstructCrab)->Unit(benchmark::kMillisecond);

void BM_ReconstructRandom(benchmark::State& state) {
  const GroupSpec g({state.range(0)});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(-3, 3);
  RatFn f(g);
  for (auto& v : f.values()) v = pick(rng);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_hidden(f));
}
BENCHMARK(BM_ReconstructRandom)->Arg(7)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ExampleOneTable(benchmark::State& state) {
  const auto table = worked_example_z7_table();
  for (auto _ : state) {
    auto oracle = MomentOracle::from_table(table, 3);
    benchmark::DoNotOptimize(reconstruct(oracle));
  }
}
BENCHMARK(BM_ExampleOneTable);

}  // namespace

BENCHMARK_MAIN();
