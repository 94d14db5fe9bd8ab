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
#include <vector>

#include "hdemand/ar1.hpp"
#include "hdemand/poisson.hpp"
#include "hdemand/rng.hpp"

namespace hdemand {

/// Endpoints from a sample by literal counting:
/// lower = largest j with #{x < j} / m <= delta/2,
/// upper = smallest k with #{x > k} / m <= delta/2.
/// Takes the sample by value and reorders it.
PoissonEndpoints empirical_endpoints(std::vector<std::int64_t> samples,
                                     double delta);

/// Monte Carlo endpoints of the Poisson-lognormal mixture whose mean is
/// f * exp(Y), Y ~ Normal(mu / (1 - rho), sigma2 / (1 - rho^2)), using m
/// independent draws. With small m the upper endpoint may equal the
/// sample maximum.
PoissonEndpoints mixed_poisson_endpoints(const Ar1Params& params, double f,
                                         double delta, std::int64_t m,
                                         RngStream& rng);

}  // namespace hdemand
