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

namespace hdemand {

// Equal-tailed integer endpoints of a count distribution at level 1 - delta.
struct PoissonEndpoints {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  double delta = 0.05;

  friend bool operator==(const PoissonEndpoints&,
                         const PoissonEndpoints&) = default;
};

/// P(Poisson(lambda) <= k). Zero for k < 0.
///
/// Sums pmf terms outward from a log-space seed at k, toward whichever tail
/// is smaller, so the result is accurate to ~1e-15 absolute. Falls back to
/// the regularized incomplete gamma function if the sum would need more
/// than 1e7 terms.
double poisson_cdf(std::int64_t k, double lambda);

/// P(Poisson(lambda) > k), computed directly in the upper tail.
double poisson_sf(std::int64_t k, double lambda);

/// lower = largest l with P(X < l) <= delta/2,
/// upper = smallest u with P(X > u) <= delta/2, X ~ Poisson(lambda).
/// Integer scan from floor(lambda) over the exact cdf.
PoissonEndpoints poisson_endpoints(double lambda, double delta);

}  // namespace hdemand
