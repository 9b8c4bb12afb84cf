#include <benchmark/benchmark.h>

#include "onestreet/dataset.hpp"
#include "onestreet/game.hpp"
#include "onestreet/metrics.hpp"
#include "onestreet/regression.hpp"
#include "onestreet/rng.hpp"
#include "onestreet/solver.hpp"

namespace {

onestreet::GameSpec uniform_spec() {
  onestreet::GameSpec spec;
  spec.deck_size = 10;
  spec.p = onestreet::uniform_distribution(10);
  spec.q = onestreet::uniform_distribution(10);
  spec.p1_bets = {1.0};
  spec.p2_bets = {1.0};
  return spec;
}

void BM_BuildGame(benchmark::State& state) {
  const onestreet::GameSpec spec = uniform_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(onestreet::build_game(spec));
  }
}
BENCHMARK(BM_BuildGame);

void BM_SolveUniform(benchmark::State& state) {
  const onestreet::GameTree tree = onestreet::build_game(uniform_spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(onestreet::solve(tree));
  }
}
BENCHMARK(BM_SolveUniform);

void BM_BestResponse(benchmark::State& state) {
  const onestreet::GameTree tree = onestreet::build_game(uniform_spec());
  const onestreet::BehavioralStrategy p2 = onestreet::uniform_strategy(tree, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(onestreet::best_response_value(tree, p2, 1));
  }
}
BENCHMARK(BM_BestResponse);

void BM_SolveRandomGame(benchmark::State& state) {
  onestreet::SplitMix64 rng(42);
  std::uint64_t i = 0;
  for (auto _ : state) {
    state.PauseTiming();
    onestreet::SplitMix64 game_rng(onestreet::derive_seed(42, 0, i++));
    onestreet::GameSpec spec = uniform_spec();
    spec.p = onestreet::sample_simplex(10, game_rng);
    spec.q = onestreet::sample_simplex(10, game_rng);
    const onestreet::GameTree tree = onestreet::build_game(spec);
    state.ResumeTiming();
    benchmark::DoNotOptimize(onestreet::solve(tree));
  }
}
BENCHMARK(BM_SolveRandomGame);

void BM_FitQuadratic(benchmark::State& state) {
  std::vector<onestreet::RegressionSample> samples;
  onestreet::SplitMix64 rng(7);
  for (int i = 0; i < 15000; ++i) {
    const double mdf = 0.5 + 0.2 * rng.uniform01();
    const double ra = rng.uniform01();
    samples.push_back({mdf, ra, 0.5 - 0.3 * ra + 0.05 * rng.uniform01()});
  }
  onestreet::ModelSpec spec;
  spec.name = "bench quadratic";
  spec.features = {onestreet::Feature::Ra2,   onestreet::Feature::RaMdf,
                   onestreet::Feature::Mdf2,  onestreet::Feature::Ra,
                   onestreet::Feature::Mdf,   onestreet::Feature::Constant};
  for (auto _ : state) {
    benchmark::DoNotOptimize(onestreet::fit_ols(samples, spec));
  }
}
BENCHMARK(BM_FitQuadratic);

}  // namespace

BENCHMARK_MAIN();
