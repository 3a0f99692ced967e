#include <benchmark/benchmark.h>

#include "levyball/pvquad.hpp"
#include "levyball/rng.hpp"
#include "levyball/simulate.hpp"
#include "levyball/stable_sampler.hpp"

namespace {

using namespace levyball;

void BM_PhiloxUniform(benchmark::State& state) {
  PathRng rng(42, 0);
  double acc = 0.0;
  for (auto _ : state) {
    acc += rng.uniform_oo();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PhiloxUniform);

void BM_StableDraw(benchmark::State& state) {
  const StabilityIndex alpha(state.range(0) / 100.0);
  PathRng rng(42, 1);
  double acc = 0.0;
  for (auto _ : state) {
    acc += sample_standard_sas(alpha, rng);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_StableDraw)->Arg(50)->Arg(100)->Arg(150);

void BM_GetoorIdentity(benchmark::State& state) {
  const StabilityIndex alpha(state.range(0) / 100.0);
  for (auto _ : state) {
    const auto result = getoor_identity_check(0.3, 1.0, alpha);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_GetoorIdentity)->Arg(50)->Arg(100)->Arg(180)->Unit(benchmark::kMillisecond);

void BM_ExitPath(benchmark::State& state) {
  const Atom atoms[] = {{{1.0, 0.0}, 1.0},
                        {{-1.0, 0.0}, 1.0},
                        {{0.0, 1.0}, 1.0},
                        {{0.0, -1.0}, 1.0}};
  ExitTimeConfig config;
  config.x0 = {0.0, 0.0};
  config.r = 1.0;
  config.alpha = 1.0;
  config.mu = SpectralMeasure::discrete(2, atoms);
  config.h = 1e-3;
  config.n_paths = 1;
  config.seed = 7;
  std::uint64_t path = 0;
  for (auto _ : state) {
    PathRng rng(config.seed, path++);
    const auto outcome = simulate_exit_exact(config, rng);
    benchmark::DoNotOptimize(outcome.time);
  }
}
BENCHMARK(BM_ExitPath)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
