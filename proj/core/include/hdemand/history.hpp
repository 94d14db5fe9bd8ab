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
#include <cstdint>
#include <span>
#include <vector>

namespace hdemand {

/// One day of observations: hospital ACU census, ICU census, regional census
/// and the regional forecast issued for that day.
struct DayRecord {
  std::int64_t day = 0;
  std::int64_t acu = 0;
  std::int64_t icu = 0;
  std::int64_t regional = 0;
  double forecast = 0.0;

  friend bool operator==(const DayRecord&, const DayRecord&) = default;
};

/// Validated, consecutive daily series. Construction throws ValidationError
/// (row is 1-based) if days are not strictly consecutive, any count is
/// negative, acu + icu > regional, or a forecast is not a positive finite
/// number.
class HistoryWindow {
 public:
  HistoryWindow() = default;
  explicit HistoryWindow(std::vector<DayRecord> records);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const DayRecord& operator[](std::size_t i) const { return records_[i]; }
  std::span<const DayRecord> records() const { return records_; }

  std::int64_t first_day() const;
  std::int64_t last_day() const;

  /// The first `count` records.
  HistoryWindow prefix(std::size_t count) const;

  std::vector<std::int64_t> regional_counts() const;
  std::vector<double> forecasts() const;

  friend bool operator==(const HistoryWindow&, const HistoryWindow&) = default;

 private:
  std::vector<DayRecord> records_;
};

}  // namespace hdemand
