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

#include "hdemand/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "hdemand/error.hpp"

namespace hdemand {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool blank(std::string_view line) { return trim(line).empty(); }

class CsvTable {
 public:
  CsvTable(std::istream& in, const std::vector<std::string>& required) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(0, "", "missing CSV header");
    const auto header = split_fields(line);
    for (const auto& name : required) {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) {
        throw ParseError(0, name, "missing column '" + name + "'");
      }
      columns_.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    width_ = header.size();
    std::size_t row = 0;
    while (std::getline(in, line)) {
      if (blank(line)) continue;
      ++row;
      rows_.push_back(line);
    }
  }

  std::size_t rows() const { return rows_.size(); }

  std::vector<std::string_view> fields(std::size_t row) const {
    auto f = split_fields(rows_[row]);
    if (f.size() != width_) {
      throw ParseError(row + 1, "",
                       "row " + std::to_string(row + 1) + " has " +
                           std::to_string(f.size()) + " fields, expected " +
                           std::to_string(width_));
    }
    std::vector<std::string_view> out;
    for (std::size_t c : columns_) out.push_back(f[c]);
    return out;
  }

 private:
  std::vector<std::size_t> columns_;
  std::size_t width_ = 0;
  std::vector<std::string> rows_;
};

std::int64_t parse_int(std::string_view s, std::size_t row, const std::string& field) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(row, field,
                     "non-integer value '" + std::string(s) + "' for " + field +
                         " at row " + std::to_string(row));
  }
  return v;
}

double parse_real(std::string_view s, std::size_t row, const std::string& field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(row, field,
                     "non-numeric value '" + std::string(s) + "' for " + field +
                         " at row " + std::to_string(row));
  }
  return v;
}

std::string format_shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

HistoryWindow read_history_csv(std::istream& in) {
  const std::vector<std::string> names = {"day", "acu", "icu", "regional_census",
                                          "regional_forecast"};
  const CsvTable table(in, names);
  std::vector<DayRecord> records;
  records.reserve(table.rows());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const auto f = table.fields(i);
    const std::size_t row = i + 1;
    DayRecord r;
    r.day = parse_int(f[0], row, names[0]);
    r.acu = parse_int(f[1], row, names[1]);
    r.icu = parse_int(f[2], row, names[2]);
    r.regional = parse_int(f[3], row, names[3]);
    r.forecast = parse_real(f[4], row, names[4]);
    records.push_back(r);
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const DayRecord& a, const DayRecord& b) { return a.day < b.day; });
  return HistoryWindow(std::move(records));
}

HistoryWindow ingest_history(const std::filesystem::path& path) {
  auto in = open(path);
  return read_history_csv(in);
}

void write_history_csv(const HistoryWindow& history, std::ostream& out) {
  out << "day,acu,icu,regional_census,regional_forecast\n";
  for (const auto& r : history.records()) {
    out << r.day << ',' << r.acu << ',' << r.icu << ',' << r.regional << ','
        << format_shortest(r.forecast) << '\n';
  }
}

std::map<std::int64_t, double> read_forecasts_csv(std::istream& in) {
  const CsvTable table(in, {"day", "regional_forecast"});
  std::map<std::int64_t, double> out;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const auto f = table.fields(i);
    const std::size_t row = i + 1;
    const std::int64_t day = parse_int(f[0], row, "day");
    const double value = parse_real(f[1], row, "regional_forecast");
    if (!(value > 0.0)) {
      throw ValidationError(row, "regional_forecast",
                            "forecast must be positive at row " + std::to_string(row));
    }
    if (!out.emplace(day, value).second) {
      throw ValidationError(row, "day", "duplicate day at row " + std::to_string(row));
    }
  }
  return out;
}

std::map<std::int64_t, double> read_forecasts(const std::filesystem::path& path) {
  auto in = open(path);
  return read_forecasts_csv(in);
}

}  // namespace hdemand
