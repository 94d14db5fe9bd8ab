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

#include "hdemand/moments.hpp"

#include <cmath>
#include <string>

#include "hdemand/ar1.hpp"
#include "hdemand/error.hpp"

namespace hdemand {

MomentStats moment_stats(std::span<const std::int64_t> counts,
                         std::span<const double> forecasts) {
  if (counts.size() != forecasts.size()) {
    throw InvalidArgument("counts and forecasts differ in length");
  }
  const std::size_t n = counts.size();
  if (n < 2) {
    throw InsufficientHistory("moment statistics need at least 2 days, got " +
                              std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(forecasts[i] > 0.0) || !std::isfinite(forecasts[i])) {
      throw InvalidForecast("forecast must be positive at index " +
                            std::to_string(i));
    }
  }

  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = static_cast<double>(counts[i]);
    const double ratio = c / forecasts[i];
    s1 += ratio;
    s2 += (c * c - c) / (forecasts[i] * forecasts[i]);
    if (i > 0) {
      s3 += ratio * (static_cast<double>(counts[i - 1]) / forecasts[i - 1]);
    }
  }
  const double nd = static_cast<double>(n);
  return {s1 / nd, s2 / nd, s3 / (nd - 1.0), static_cast<std::int64_t>(n)};
}

MomentStats moment_stats(const HistoryWindow& history) {
  const auto counts = history.regional_counts();
  const auto forecasts = history.forecasts();
  return moment_stats(counts, forecasts);
}

MomentValues moment_fns(double mu, double sigma2, double rho) {
  check_ar1_params({mu, sigma2, rho});
  const double a = mu / (1.0 - rho);
  const double s = sigma2 / (1.0 - rho * rho);
  return {std::exp(a + 0.5 * s), std::exp(2.0 * a + 2.0 * s),
          std::exp(2.0 * a + sigma2 / (1.0 - rho))};
}

}  // namespace hdemand
