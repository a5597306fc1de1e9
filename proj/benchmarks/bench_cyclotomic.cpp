#include <benchmark/benchmark.h>

#include <random>

#include "autorecon/cyclotomic.hpp"

using namespace autorecon;

namespace {

CycNum random_cyc(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-50, 50);
  CycNum z(ctx, Rational(0));
  for (std::int64_t k = 0; k < ctx->conductor(); ++k) z += root_of_unity(ctx, k) * Rational(pick(rng));
  return z;
}

void BM_Multiply(benchmark::State& state) {
  auto ctx = CyclotomicContext::get(state.range(0));
  std::mt19937_64 rng(3);
  const auto a = random_cyc(ctx, rng), b = random_cyc(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(7)->Arg(13)->Arg(30)->Arg(60);

void BM_GaloisTwist(benchmark::State& state) {
  auto ctx = CyclotomicContext::get(state.range(0));
  std::mt19937_64 rng(4);
  const auto a = random_cyc(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.automorphism(7));
}
BENCHMARK(BM_GaloisTwist)->Arg(13)->Arg(30);

void BM_Inverse(benchmark::State& state) {
  auto ctx = CyclotomicContext::get(state.range(0));
  std::mt19937_64 rng(5);
  const auto a = random_cyc(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_Inverse)->Arg(7)->Arg(13)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
