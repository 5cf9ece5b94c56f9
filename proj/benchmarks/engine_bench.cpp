#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "stringy/config_io.hpp"
#include "stringy/engine.hpp"

namespace {

using namespace stringy;

void BM_E6Expansion(benchmark::State &state) {
  const auto e = compute(load_config(STRINGY_FIXTURE_DIR "/e6_fixture.json")).value();
  const auto horizon = static_cast<Exponent>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_rational(e, horizon));
}
BENCHMARK(BM_E6Expansion)->Arg(12)->Arg(48)->Arg(192);

void BM_ComputeRandom(benchmark::State &state) {
  gen::Rng rng(1);
  std::vector<ResolutionConfig> configs;
  for (int k = 0; k < 64; ++k) configs.push_back(gen::lenient_config(rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(compute(configs[k++ % configs.size()], 20));
}
BENCHMARK(BM_ComputeRandom);

void BM_ClosedFormulaByComponents(benchmark::State &state) {
  // A chain of n components, each meeting the next.
  const auto n = static_cast<std::size_t>(state.range(0));
  ResolutionConfig cfg;
  cfg.dimension = 3;
  cfg.ambient = hd_projective_space(3).poly;
  for (std::size_t i = 0; i < n; ++i) {
    cfg.components.push_back({"E" + std::to_string(i), static_cast<std::int64_t>(1 + i % 5)});
    cfg.strata[Subset{1} << i] = hd_projective_space(2).poly;
    if (i > 0) cfg.strata[(Subset{3} << (i - 1))] = hd_projective_space(1).poly;
  }
  for (auto _ : state) benchmark::DoNotOptimize(stringy_e_closed(cfg));
}
BENCHMARK(BM_ClosedFormulaByComponents)->RangeMultiplier(2)->Range(2, 16);

void BM_Normalize(benchmark::State &state) {
  const auto m = static_cast<Exponent>(state.range(0));
  BivariatePolynomial num = BivariatePolynomial::constant(1);
  for (Exponent k = 1; k <= m; ++k) num *= cyclo_factor(k);
  std::vector<Exponent> den;
  for (Exponent k = 1; k <= m; ++k) den.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(StringyRational::normalized(num, CycloProduct(den)));
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
