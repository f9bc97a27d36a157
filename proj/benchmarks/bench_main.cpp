#include <benchmark/benchmark.h>

#include <vector>

#include "comax/census.hpp"
#include "comax/omega.hpp"
#include "comax/omega_generator.hpp"
#include "comax/theorem2.hpp"

namespace {

using namespace comax;

std::vector<std::pair<OmegaFunction, OmegaFunction>> pairs(bool comonotone, std::size_t count) {
  std::vector<std::pair<OmegaFunction, OmegaFunction>> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(comonotone ? generate_comonotone_pair(derive_seed(1, i), {})
                             : generate_independent_pair(derive_seed(1, i), {}));
  }
  return out;
}

void BM_ComonotoneOmega(benchmark::State& state) {
  const auto ps = pairs(state.range(0) != 0, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(comonotone_omega(f, g));
  }
}
BENCHMARK(BM_ComonotoneOmega)->Arg(0)->Arg(1);

void BM_Join(benchmark::State& state) {
  const auto ps = pairs(false, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(join(f, g));
  }
}
BENCHMARK(BM_Join);

void BM_NuEval(benchmark::State& state) {
  const auto ps = pairs(true, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nu_eval(ps[i++ % ps.size()].first));
}
BENCHMARK(BM_NuEval);

void BM_Census(benchmark::State& state) {
  std::vector<Rational> values;
  for (long k = 0; k < state.range(0); ++k) values.emplace_back(k, state.range(0) - 1);
  const GridChain chain(values);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_census(chain, 2));
}
BENCHMARK(BM_Census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_StructuredFamily(benchmark::State& state) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(structured_family(grid, 2));
}
BENCHMARK(BM_StructuredFamily)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
