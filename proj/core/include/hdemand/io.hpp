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
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>

#include "hdemand/history.hpp"

namespace hdemand {

/// Reads `day,acu,icu,regional_census,regional_forecast` (header required,
/// any column order, extra columns ignored). Rows are sorted by day before
/// validation. Throws ParseError for unreadable input and ValidationError
/// for invariant breaches; both name the data row (1-based) and field.
HistoryWindow read_history_csv(std::istream& in);
HistoryWindow ingest_history(const std::filesystem::path& path);

/// Writes the same schema; forecasts use shortest round-trip formatting so
/// read_history_csv(write_history_csv(h)) == h.
void write_history_csv(const HistoryWindow& history, std::ostream& out);

/// Reads `day,regional_forecast` into a day -> forecast map.
std::map<std::int64_t, double> read_forecasts_csv(std::istream& in);
std::map<std::int64_t, double> read_forecasts(const std::filesystem::path& path);

}  // namespace hdemand
