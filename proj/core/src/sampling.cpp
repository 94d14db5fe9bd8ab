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

#include "hdemand/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hdemand/error.hpp"

namespace hdemand {
namespace {

// p + q computed from two separately rounded ratios can exceed 1 by an ulp.
constexpr double kShareSlack = 1e-12;

}  // namespace

std::int64_t sample_poisson(double lambda, RngStream& rng) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw InvalidArgument("Poisson mean must be finite and non-negative, got " +
                          std::to_string(lambda));
  }
  if (lambda == 0.0) return 0;
  std::poisson_distribution<std::int64_t> dist(lambda);
  return dist(rng);
}

double sample_normal(double mean, double variance, RngStream& rng) {
  if (!(variance >= 0.0)) {
    throw InvalidArgument("normal variance must be non-negative");
  }
  if (variance == 0.0) return mean;
  std::normal_distribution<double> dist(0.0, 1.0);
  return mean + std::sqrt(variance) * dist(rng);
}

MultinomialSplit sample_multinomial_split(std::int64_t n, double p, double q,
                                          RngStream& rng) {
  if (n < 0) throw InvalidArgument("multinomial trial count must be >= 0");
  if (!(p >= 0.0 && q >= 0.0) || p + q > 1.0 + kShareSlack) {
    throw InvalidArgument("multinomial shares must satisfy p, q >= 0, p + q <= 1");
  }
  MultinomialSplit out;
  if (n == 0) return out;

  const double pa = std::min(p, 1.0);
  if (pa >= 1.0) {
    out.a = n;
  } else if (pa > 0.0) {
    std::binomial_distribution<std::int64_t> dist(n, pa);
    out.a = dist(rng);
  }
  const std::int64_t remaining = n - out.a;
  if (remaining > 0 && q > 0.0 && pa < 1.0) {
    const double qb = std::min(q / (1.0 - pa), 1.0);
    if (qb >= 1.0) {
      out.b = remaining;
    } else {
      std::binomial_distribution<std::int64_t> dist(remaining, qb);
      out.b = dist(rng);
    }
  }
  out.rest = n - out.a - out.b;
  return out;
}

}  // namespace hdemand
