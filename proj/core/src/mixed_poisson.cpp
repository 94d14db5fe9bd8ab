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

#include "hdemand/mixed_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hdemand/error.hpp"
#include "hdemand/sampling.hpp"

namespace hdemand {

PoissonEndpoints empirical_endpoints(std::vector<std::int64_t> samples,
                                     double delta) {
  if (samples.empty()) throw InvalidArgument("empty Monte Carlo sample");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1), got " +
                          std::to_string(delta));
  }
  const auto m = static_cast<std::int64_t>(samples.size());
  const double half = delta / 2.0;
  const double md = static_cast<double>(m);

  // Largest tail count c with c / m <= delta / 2.
  auto c = static_cast<std::int64_t>(std::floor(half * md));
  while (c + 1 < m && static_cast<double>(c + 1) / md <= half) ++c;
  while (c > 0 && static_cast<double>(c) / md > half) --c;

  // #{x < j} <= c  <=>  j <= x_(c) (0-based order statistic), and
  // #{x > k} <= c  <=>  k >= x_(m-1-c).
  const auto lo = samples.begin() + c;
  std::nth_element(samples.begin(), lo, samples.end());
  const std::int64_t lower = *lo;
  const auto hi = samples.begin() + (m - 1 - c);
  std::nth_element(samples.begin(), hi, samples.end());
  const std::int64_t upper = *hi;
  return {lower, upper, delta};
}

PoissonEndpoints mixed_poisson_endpoints(const Ar1Params& params, double f,
                                         double delta, std::int64_t m,
                                         RngStream& rng) {
  check_ar1_params(params);
  if (m <= 0) throw InvalidArgument("Monte Carlo sample count must be positive");
  if (!std::isfinite(f) || f < 0.0) {
    throw InvalidArgument("mixture scale must be finite and non-negative");
  }

  const double mean = params.stationary_mean();
  const double sd = std::sqrt(params.stationary_variance());
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<std::int64_t> draws(static_cast<std::size_t>(m));
  for (auto& draw : draws) {
    const double y = sd > 0.0 ? mean + sd * normal(rng) : mean;
    draw = sample_poisson(f * std::exp(y), rng);
  }
  return empirical_endpoints(std::move(draws), delta);
}

}  // namespace hdemand
