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

#include "hdemand/history.hpp"

#include <cmath>
#include <string>

#include "hdemand/error.hpp"

namespace hdemand {

HistoryWindow::HistoryWindow(std::vector<DayRecord> records)
    : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const DayRecord& r = records_[i];
    const std::size_t row = i + 1;
    if (i > 0 && r.day != records_[i - 1].day + 1) {
      throw ValidationError(row, "day",
                            "day index not consecutive at row " +
                                std::to_string(row) + " (day " +
                                std::to_string(r.day) + " follows " +
                                std::to_string(records_[i - 1].day) + ")");
    }
    if (r.acu < 0 || r.icu < 0 || r.regional < 0) {
      throw ValidationError(row, r.acu < 0 ? "acu" : r.icu < 0 ? "icu" : "regional_census",
                            "negative count at row " + std::to_string(row));
    }
    if (r.acu + r.icu > r.regional) {
      throw ValidationError(row, "acu",
                            "A+B exceeds N at row " + std::to_string(row));
    }
    if (!std::isfinite(r.forecast) || r.forecast <= 0.0) {
      throw ValidationError(row, "regional_forecast",
                            "forecast must be positive at row " +
                                std::to_string(row));
    }
  }
}

std::int64_t HistoryWindow::first_day() const {
  if (records_.empty()) throw InsufficientHistory("empty history window");
  return records_.front().day;
}

std::int64_t HistoryWindow::last_day() const {
  if (records_.empty()) throw InsufficientHistory("empty history window");
  return records_.back().day;
}

HistoryWindow HistoryWindow::prefix(std::size_t count) const {
  if (count > records_.size()) {
    throw InvalidArgument("prefix longer than history window");
  }
  HistoryWindow out;
  out.records_.assign(records_.begin(),
                      records_.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

std::vector<std::int64_t> HistoryWindow::regional_counts() const {
  std::vector<std::int64_t> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.regional);
  return out;
}

std::vector<double> HistoryWindow::forecasts() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.forecast);
  return out;
}

}  // namespace hdemand
