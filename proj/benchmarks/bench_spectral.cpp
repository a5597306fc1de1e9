#include <benchmark/benchmark.h>

#include <random>

#include "autorecon/spectral.hpp"

using namespace autorecon;

namespace {

RatFn random_fn(const GroupSpec& g) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(-3, 3);
  RatFn f(g);
  for (auto& v : f.values()) v = pick(rng);
  return f;
}

void BM_Dft1D(benchmark::State& state) {
  const auto f = random_fn(GroupSpec({state.range(0)}));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dft1D)->Arg(7)->Arg(13)->Arg(30)->Arg(60)->Complexity();

void BM_Dft2D(benchmark::State& state) {
  const auto f = random_fn(GroupSpec({state.range(0), state.range(0)}));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_Dft2D)->Arg(6)->Arg(13);

void BM_DftRoundTrip(benchmark::State& state) {
  const auto f = random_fn(GroupSpec({13, 13}));
  for (auto _ : state) benchmark::DoNotOptimize(idft_rational(dft(f)));
}
BENCHMARK(BM_DftRoundTrip);

}  // namespace

BENCHMARK_MAIN();
