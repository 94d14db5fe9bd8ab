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

#include <cstddef>
#include <vector>

#include "hdemand/rng.hpp"

namespace hdemand {

/// Gaussian AR(1) for the log relative forecast error:
/// y[i+1] = rho * y[i] + z[i+1], z ~ Normal(mu, sigma2), |rho| < 1.
struct Ar1Params {
  double mu = 0.0;
  double sigma2 = 0.0;
  double rho = 0.0;

  double stationary_mean() const;
  double stationary_variance() const;
};

struct Ar1LognormalPath {
  std::vector<double> y;
  std::vector<double> gamma;  // exp(y)
  Ar1Params params;
};

/// Throws InvalidArgument unless |rho| < 1 and sigma2 >= 0.
void check_ar1_params(const Ar1Params& params);

/// Stationary path: y[0] from the stationary normal, then the recursion.
/// With sigma2 == 0 every y[i] equals the stationary mean exactly.
Ar1LognormalPath sample_ar1_path(const Ar1Params& params, std::size_t length,
                                 RngStream& rng);

}  // namespace hdemand
