#include <benchmark/benchmark.h>

#include "tileforge/tileforge.hpp"

using namespace tileforge;

namespace {

void BM_LevelSet(benchmark::State& state) {
  const IntMatrix a{{2, 1}, {0, 2}};
  const DigitSet d = centered_digit_set(a);
  ExecutionOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_set(a, d, n, options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_LevelSet)->Args({6, 1})->Args({9, 1})->Args({9, 4});

void BM_CenteredDigitSet(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const IntMatrix a{{k, 1, 0}, {0, k, 1}, {0, 0, k}};
  for (auto _ : state) benchmark::DoNotOptimize(centered_digit_set(a));
  state.SetItemsProcessed(state.iterations() * k * k * k);
}
BENCHMARK(BM_CenteredDigitSet)->Arg(3)->Arg(6)->Arg(10);

void BM_Rasterize(benchmark::State& state) {
  const IntMatrix a{{2, 1}, {0, 2}};
  const TileCloud cloud = approximate(a, centered_digit_set(a), 8);
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(cloud, 256, 256));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cloud.size()));
}
BENCHMARK(BM_Rasterize);

void BM_HermiteNormalForm(benchmark::State& state) {
  std::vector<IntVector> gens;
  const auto m = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < 2 * m; ++i) {
    IntVector v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<long>((i * 7 + j * 13 + i * j) % 23) - 11;
    gens.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(hnf(gens, m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(6);

void BM_SufficientCondition(benchmark::State& state) {
  const IntMatrix a{{5, 3}, {0, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(sufficient_condition(a));
}
BENCHMARK(BM_SufficientCondition);

}  // namespace
BENCHMARK_MAIN();
