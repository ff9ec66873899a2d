#include <benchmark/benchmark.h>

#include "domset/generators.hpp"
#include "domset/greedy.hpp"

namespace {

void BM_GreedyPhasePreference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::random_regular_graph(n, 5, 42);
  const auto c = domset::solve_coefficients(5);
  for (auto _ : state) {
    auto result = domset::run_greedy(g, c, domset::Strategy::PhasePreference);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GreedyPhasePreference)->Arg(100)->Arg(400)->Arg(1600);

void BM_GreedyMaxGain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::random_regular_graph(n, 5, 42);
  const auto c = domset::solve_coefficients(5);
  for (auto _ : state) {
    auto result = domset::run_greedy(g, c, domset::Strategy::MaxGain);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GreedyMaxGain)->Arg(100)->Arg(400);

void BM_GreedyUnaudited(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = domset::random_regular_graph(n, 5, 42);
  const auto c = domset::solve_coefficients(5);
  for (auto _ : state) {
    auto result = domset::run_greedy(g, c, domset::Strategy::PhasePreference, /*audit=*/false);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GreedyUnaudited)->Arg(1600);

}  // namespace
