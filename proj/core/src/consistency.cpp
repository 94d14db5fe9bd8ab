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

#include <cmath>
#include <string>
#include <vector>

#include "hdemand/evaluation.hpp"
#include "hdemand/moments.hpp"
#include "hdemand/rng.hpp"
#include "hdemand/sampling.hpp"

namespace hdemand {
namespace {

MomentStats simulate_perfect_window(double lambda, std::int64_t n, RngStream rng) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  for (auto& c : counts) c = sample_poisson(lambda, rng);
  const std::vector<double> forecasts(counts.size(), lambda);
  return moment_stats(counts, forecasts);
}

struct Summary {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
};

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  for (double x : xs) s.variance += (x - s.mean) * (x - s.mean);
  s.variance /= static_cast<double>(xs.size() - 1);
  return s;
}

ConsistencyCheck within(std::string name, double statistic, double lower,
                        double upper) {
  return {std::move(name), statistic, lower, upper,
          statistic >= lower && statistic <= upper};
}

}  // namespace

bool ConsistencyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

ConsistencyReport consistency_suite(const ConsistencyConfig& config) {
  ConsistencyReport report;
  const RngStream root(config.seed, 2);

  const MomentStats large =
      simulate_perfect_window(config.lambda, config.n_large, root.split(0));
  report.checks.push_back(within("large_n_m1", large.m1_hat, 0.98, 1.02));
  report.checks.push_back(within("large_n_m2", large.m2_hat, 0.98, 1.02));
  report.checks.push_back(within("large_n_m3", large.m3_hat, 0.98, 1.02));

  const auto reps = static_cast<std::size_t>(config.replications);
  std::vector<double> m1_small, m2_small, m3_small, m1_big;
  const RngStream small_root = root.split(1);
  const RngStream big_root = root.split(2);
  for (std::size_t i = 0; i < reps; ++i) {
    const MomentStats s = simulate_perfect_window(config.lambda, config.n_small,
                                                  small_root.split(i));
    m1_small.push_back(s.m1_hat);
    m2_small.push_back(s.m2_hat);
    m3_small.push_back(s.m3_hat);
    m1_big.push_back(
        simulate_perfect_window(config.lambda, config.n_big, big_root.split(i)).m1_hat);
  }

  const double rn = static_cast<double>(reps);
  const std::vector<std::pair<std::string, const std::vector<double>*>> unbiased = {
      {"mean_m1_within_3se", &m1_small},
      {"mean_m2_within_3se", &m2_small},
      {"mean_m3_within_3se", &m3_small}};
  for (const auto& [name, xs] : unbiased) {
    const Summary s = summarize(*xs);
    const double se = std::sqrt(s.variance / rn);
    report.checks.push_back(within(name, s.mean, 1.0 - 3.0 * se, 1.0 + 3.0 * se));
  }

  const Summary small = summarize(m1_small);
  const Summary big = summarize(m1_big);
  report.checks.push_back(
      within("var_m1_ratio_small_over_big", small.variance / big.variance, 2.0, 8.0));

  const double bound =
      2.0 / (static_cast<double>(config.n_small) * config.lambda);
  report.checks.push_back(within("var_m1_poisson_bound", small.variance, 0.0, bound));
  return report;
}

}  // namespace hdemand
