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
#include <span>

#include "hdemand/history.hpp"

namespace hdemand {

/// Sample moments of the count/forecast ratio series:
///   m1_hat = mean(N_i / F_i)
///   m2_hat = mean((N_i^2 - N_i) / F_i^2)
///   m3_hat = mean over adjacent pairs of N_i N_{i-1} / (F_i F_{i-1})
struct MomentStats {
  double m1_hat = 0.0;
  double m2_hat = 0.0;
  double m3_hat = 0.0;
  std::int64_t n = 0;
};

/// Population moments of Gamma = exp(Y) under the stationary AR(1):
/// E[Gamma], E[Gamma^2] and E[Gamma_i Gamma_{i+1}].
struct MomentValues {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

/// Throws InsufficientHistory for n < 2, InvalidForecast for F_i <= 0.
MomentStats moment_stats(std::span<const std::int64_t> counts,
                         std::span<const double> forecasts);
MomentStats moment_stats(const HistoryWindow& history);

/// Throws InvalidArgument unless |rho| < 1 and sigma2 >= 0.
MomentValues moment_fns(double mu, double sigma2, double rho);

}  // namespace hdemand
