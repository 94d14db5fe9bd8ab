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

#pragma once

#include <cstdint>

#include "hdemand/rng.hpp"

namespace hdemand {

struct MultinomialSplit {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t rest = 0;
};

std::int64_t sample_poisson(double lambda, RngStream& rng);

/// Normal(mean, variance); variance == 0 returns mean without consuming.
double sample_normal(double mean, double variance, RngStream& rng);

/// (a, b, n - a - b) ~ Multinomial(n; p, q, 1 - p - q), drawn as
/// a ~ Bin(n, p) then b ~ Bin(n - a, q / (1 - p)).
MultinomialSplit sample_multinomial_split(std::int64_t n, double p, double q,
                                          RngStream& rng);

}  // namespace hdemand
