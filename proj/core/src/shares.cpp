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

#include "hdemand/shares.hpp"

#include "hdemand/error.hpp"

namespace hdemand {

ShareEstimates shares_from_totals(std::int64_t total_a, std::int64_t total_b,
                                  std::int64_t total_n) {
  if (total_n <= 0) {
    throw DegenerateHistory("regional census sums to zero; shares undefined");
  }
  ShareEstimates s;
  s.total_a = total_a;
  s.total_b = total_b;
  s.total_n = total_n;
  // A single correctly rounded division of two exact integers.
  s.p_hat = static_cast<double>(total_a) / static_cast<double>(total_n);
  s.q_hat = static_cast<double>(total_b) / static_cast<double>(total_n);
  return s;
}

ShareEstimates estimate_shares(const HistoryWindow& history) {
  std::int64_t a = 0, b = 0, n = 0;
  for (const auto& r : history.records()) {
    a += r.acu;
    b += r.icu;
    n += r.regional;
  }
  return shares_from_totals(a, b, n);
}

}  // namespace hdemand
