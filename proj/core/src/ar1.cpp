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

#include "hdemand/ar1.hpp"

#include <cmath>
#include <string>

#include "hdemand/error.hpp"
#include "hdemand/sampling.hpp"

namespace hdemand {

double Ar1Params::stationary_mean() const { return mu / (1.0 - rho); }

double Ar1Params::stationary_variance() const {
  return sigma2 / (1.0 - rho * rho);
}

void check_ar1_params(const Ar1Params& params) {
  if (!std::isfinite(params.rho) || std::abs(params.rho) >= 1.0) {
    throw InvalidArgument("AR(1) coefficient must satisfy |rho| < 1, got " +
                          std::to_string(params.rho));
  }
  if (!std::isfinite(params.sigma2) || params.sigma2 < 0.0) {
    throw InvalidArgument("innovation variance must be non-negative");
  }
  if (!std::isfinite(params.mu)) {
    throw InvalidArgument("innovation mean must be finite");
  }
}

Ar1LognormalPath sample_ar1_path(const Ar1Params& params, std::size_t length,
                                 RngStream& rng) {
  check_ar1_params(params);
  if (length == 0) throw InvalidArgument("AR(1) path length must be positive");

  Ar1LognormalPath path;
  path.params = params;
  path.y.resize(length);
  path.gamma.resize(length);

  if (params.sigma2 == 0.0) {
    const double level = params.stationary_mean();
    path.y.assign(length, level);
    path.gamma.assign(length, std::exp(level));
    return path;
  }

  path.y[0] = sample_normal(params.stationary_mean(),
                            params.stationary_variance(), rng);
  for (std::size_t i = 1; i < length; ++i) {
    path.y[i] = params.rho * path.y[i - 1] +
                sample_normal(params.mu, params.sigma2, rng);
  }
  for (std::size_t i = 0; i < length; ++i) path.gamma[i] = std::exp(path.y[i]);
  return path;
}

}  // namespace hdemand
