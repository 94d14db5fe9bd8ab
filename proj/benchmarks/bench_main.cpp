// Copyright 2026 The hdemand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hdemand/bootstrap.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/mixed_poisson.hpp"
#include "hdemand/moments.hpp"
#include "hdemand/poisson.hpp"
#include "hdemand/synthetic.hpp"

using namespace hdemand;

namespace {

const SyntheticScenario& scenario(ModelKind kind) {
  static const SyntheticScenario perfect = generate_scenario(
      ModelKind::perfect, default_sir_params(), 0.05, 0.02, std::nullopt, RngStream(1, 3));
  static const SyntheticScenario unbiased =
      generate_scenario(ModelKind::unbiased, default_sir_params(), 0.05, 0.02,
                        default_error_params(ModelKind::unbiased).ar1(), RngStream(1, 3));
  static const SyntheticScenario biased =
      generate_scenario(ModelKind::biased, default_sir_params(), 0.05, 0.02,
                        default_error_params(ModelKind::biased).ar1(), RngStream(1, 3));
  switch (kind) {
    case ModelKind::perfect: return perfect;
    case ModelKind::unbiased: return unbiased;
    default: return biased;
  }
}

void BM_PoissonEndpoints(benchmark::State& state) {
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poisson_endpoints(lambda, 0.05));
}
BENCHMARK(BM_PoissonEndpoints)->Arg(5)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_MixedEndpoints(benchmark::State& state) {
  RngStream rng(1, 0);
  const Ar1Params p{-0.01 / 3.0, 0.01, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_poisson_endpoints(p, 25.0, 0.05, state.range(0), rng));
  }
}
BENCHMARK(BM_MixedEndpoints)->Arg(300)->Arg(100000);

void BM_FitUnbiased(benchmark::State& state) {
  const auto stats = moment_stats(scenario(ModelKind::unbiased).history);
  for (auto _ : state) benchmark::DoNotOptimize(fit_unbiased(stats));
}
BENCHMARK(BM_FitUnbiased);

void BM_FitBiased(benchmark::State& state) {
  const auto stats = moment_stats(scenario(ModelKind::biased).history);
  for (auto _ : state) benchmark::DoNotOptimize(fit_biased(stats));
}
BENCHMARK(BM_FitBiased);

void BM_Bootstrap(benchmark::State& state) {
  const auto kind = static_cast<ModelKind>(state.range(0));
  const auto& sc = scenario(kind);
  const HistoryWindow history = sc.history.prefix(93);
  BootstrapConfig cfg;
  cfg.replicates = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bootstrap_predict(kind, history, sc.history[99].forecast, cfg, RngStream(1, 0)));
  }
}
BENCHMARK(BM_Bootstrap)
    ->Args({0, 1000})
    ->Args({1, 100})
    ->Args({2, 100})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
