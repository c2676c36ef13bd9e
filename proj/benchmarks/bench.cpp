#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "erasing/classifier.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/entropy.hpp"

using namespace erasing;

namespace {

const Substitution& sigma(int i) {
  static const Substitution table[4] = {
      Substitution::load(ERASING_DATA_DIR "/sigma1.sub"), Substitution::load(ERASING_DATA_DIR "/sigma2.sub"),
      Substitution::load(ERASING_DATA_DIR "/sigma3.sub"), Substitution::load(ERASING_DATA_DIR "/sigma4.sub")};
  return table[i - 1];
}

std::vector<UnitReal> points(long max_den, std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<UnitReal> out;
  for (std::size_t i = 0; i < n; ++i) {
    long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_den));
    out.emplace_back(mpz_class(static_cast<long>(rng() % static_cast<unsigned long>(den + 1))), mpz_class(den));
  }
  return out;
}

void BM_EvalF(benchmark::State& state) {
  const auto& s = sigma(static_cast<int>(state.range(0)));
  const auto xs = points(state.range(1), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_f(s, xs[i++ % xs.size()]));
}
BENCHMARK(BM_EvalF)->ArgsProduct({{2, 3, 4}, {1000, 1000000}})->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const auto& s = sigma(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Preimage(benchmark::State& state) {
  const auto ys = points(100000, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(preimage_point(sigma(3), ys[i++ % ys.size()]));
}
BENCHMARK(BM_Preimage)->Unit(benchmark::kMicrosecond);

void BM_MaxVanishingOrder(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_vanishing_order(sigma(3), k, 1));
}
BENCHMARK(BM_MaxVanishingOrder)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PeriodicPoint(benchmark::State& state) {
  const int stages = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_point(sigma(3), "11", stages));
}
BENCHMARK(BM_PeriodicPoint)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SeparatedFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(separated_family(sigma(3), 2, n, 1));
}
BENCHMARK(BM_SeparatedFamily)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ScrambledPair(benchmark::State& state) {
  std::vector<FiniteWord> targets;
  for (int i = 1; i <= 16; ++i) targets.emplace_back(static_cast<std::size_t>(i), '1');
  for (auto _ : state) benchmark::DoNotOptimize(scrambled_pair(sigma(3), {1, 0}, {0, 1}, targets, 11));
}
BENCHMARK(BM_ScrambledPair)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
