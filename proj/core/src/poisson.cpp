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

#include "hdemand/poisson.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

#include "hdemand/error.hpp"

namespace hdemand {
namespace {

constexpr double kRelTol = 1e-17;
constexpr std::int64_t kMaxTerms = 10'000'000;

void check_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw InvalidArgument("Poisson mean must be finite and non-negative, got " +
                          std::to_string(lambda));
  }
}

double log_pmf(std::int64_t k, double lambda) {
  const double kd = static_cast<double>(k);
  return kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0);
}

// sum_{j=0}^{k} pmf(j) for 0 <= k < lambda, summed downward from k.
// Returns a negative value if the term budget ran out.
double lower_sum(std::int64_t k, double lambda) {
  double term = std::exp(log_pmf(k, lambda));
  if (term == 0.0) return 0.0;
  double sum = term;
  std::int64_t terms = 1;
  for (std::int64_t j = k; j > 0; --j) {
    term *= static_cast<double>(j) / lambda;
    sum += term;
    if (term < sum * kRelTol) break;
    if (++terms > kMaxTerms) return -1.0;
  }
  return sum;
}

// sum_{j>k} pmf(j) for k >= lambda, summed upward from k + 1.
double upper_sum(std::int64_t k, double lambda) {
  double term = std::exp(log_pmf(k + 1, lambda));
  if (term == 0.0) return 0.0;
  double sum = term;
  std::int64_t terms = 1;
  for (std::int64_t j = k + 2;; ++j) {
    term *= lambda / static_cast<double>(j);
    sum += term;
    if (term < sum * kRelTol) break;
    if (++terms > kMaxTerms) return -1.0;
  }
  return sum;
}

}  // namespace

double poisson_cdf(std::int64_t k, double lambda) {
  check_lambda(lambda);
  if (k < 0) return 0.0;
  if (lambda == 0.0) return 1.0;
  if (static_cast<double>(k) < lambda) {
    const double s = lower_sum(k, lambda);
    if (s >= 0.0) return s;
  } else {
    const double tail = upper_sum(k, lambda);
    if (tail >= 0.0) return 1.0 - tail;
  }
  return boost::math::gamma_q(static_cast<double>(k) + 1.0, lambda);
}

double poisson_sf(std::int64_t k, double lambda) {
  check_lambda(lambda);
  if (k < 0) return 1.0;
  if (lambda == 0.0) return 0.0;
  if (static_cast<double>(k) >= lambda) {
    const double tail = upper_sum(k, lambda);
    if (tail >= 0.0) return tail;
  } else {
    const double s = lower_sum(k, lambda);
    if (s >= 0.0) return 1.0 - s;
  }
  return boost::math::gamma_p(static_cast<double>(k) + 1.0, lambda);
}

PoissonEndpoints poisson_endpoints(double lambda, double delta) {
  check_lambda(lambda);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1), got " +
                          std::to_string(delta));
  }
  const double half = delta / 2.0;
  const auto start = static_cast<std::int64_t>(std::floor(lambda));

  std::int64_t lower = start;
  if (poisson_cdf(lower - 1, lambda) <= half) {
    while (poisson_cdf(lower, lambda) <= half) ++lower;
  } else {
    do {
      --lower;
    } while (poisson_cdf(lower - 1, lambda) > half);
  }

  std::int64_t upper = start;
  if (poisson_sf(upper, lambda) <= half) {
    while (upper > 0 && poisson_sf(upper - 1, lambda) <= half) --upper;
  } else {
    do {
      ++upper;
    } while (poisson_sf(upper, lambda) > half);
  }
  return {lower, upper, delta};
}

}  // namespace hdemand
