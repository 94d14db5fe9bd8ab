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

#include "hdemand/history.hpp"

namespace hdemand {

/// Pooled ratio estimates of the hospital's ACU and ICU shares of regional
/// census; these are the binomial MLEs given the regional counts.
struct ShareEstimates {
  double p_hat = 0.0;
  double q_hat = 0.0;
  std::int64_t total_n = 0;
  std::int64_t total_a = 0;
  std::int64_t total_b = 0;
};

/// Throws DegenerateHistory if the window has no regional census.
ShareEstimates estimate_shares(const HistoryWindow& history);

/// Same estimator from summed counts.
ShareEstimates shares_from_totals(std::int64_t total_a, std::int64_t total_b,
                                  std::int64_t total_n);

}  // namespace hdemand
