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

#include "hdemand/evaluation.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#include "hdemand/bootstrap.hpp"
#include "hdemand/error.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/rng.hpp"

namespace hdemand {
namespace {

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void add_records(std::vector<BacktestRecord>& out, const PredictionResult& r,
                 const DayRecord& day, ModelKind model, std::int64_t n_used,
                 bool degraded, const std::string& failure, double elapsed) {
  BacktestRecord acu;
  acu.eval_day = day.day;
  acu.model = model;
  acu.target = Target::acu;
  acu.plugin = r.plugin_a;
  acu.bootstrap = r.bootstrap_a;
  acu.actual = day.acu;
  acu.n_used = n_used;
  acu.degraded = degraded;
  acu.failure = failure;
  acu.elapsed_seconds = elapsed;

  BacktestRecord icu = acu;
  icu.target = Target::icu;
  icu.plugin = r.plugin_b;
  icu.bootstrap = r.bootstrap_b;
  icu.actual = day.icu;

  out.push_back(std::move(acu));
  out.push_back(std::move(icu));
}

}  // namespace

std::vector<BacktestRecord> rolling_backtest(const HistoryWindow& series,
                                             std::int64_t start_index,
                                             std::int64_t horizon_r,
                                             std::int64_t stride,
                                             const std::vector<ModelKind>& models,
                                             const BacktestConfig& config) {
  if (horizon_r < 1) throw ConfigError("backtest horizon must be positive");
  if (stride < 1) throw ConfigError("backtest stride must be positive");
  if (models.empty()) throw ConfigError("backtest needs at least one model");
  const auto size = static_cast<std::int64_t>(series.size());
  if (start_index < 0 || start_index >= size) {
    throw ConfigError("backtest start index outside the series");
  }
  if (start_index - horizon_r + 1 < 2) {
    throw ConfigError("first backtest window must hold at least 2 days");
  }

  BootstrapConfig boot;
  boot.delta = config.delta;
  boot.alpha = config.alpha;
  boot.replicates = config.replicates;
  boot.mc_samples = config.mc_samples;
  boot.horizon_r = horizon_r;
  boot.threads = config.threads;

  const RngStream root(config.seed, 1);
  std::vector<BacktestRecord> out;
  for (std::int64_t t = start_index; t < size; t += stride) {
    const auto n_used = t - horizon_r + 1;
    const HistoryWindow window = series.prefix(static_cast<std::size_t>(n_used));
    const DayRecord& day = series[static_cast<std::size_t>(t)];
    const RngStream day_rng = root.split(static_cast<std::uint64_t>(t));

    for (ModelKind model : models) {
      const RngStream model_rng = day_rng.split(static_cast<std::uint64_t>(model));
      const auto started = std::chrono::steady_clock::now();
      bool degraded = false;
      std::string failure;
      PredictionResult result;
      try {
        result = bootstrap_predict(model, window, day.forecast, boot, model_rng);
      } catch (const FitFailure& e) {
        degraded = true;
        failure = e.what();
      } catch (const BootstrapFailure& e) {
        degraded = true;
        failure = e.what();
      } catch (const InfeasibleMoments& e) {
        degraded = true;
        failure = e.what();
      }
      if (degraded) {
        result = bootstrap_perfect(window, day.forecast, boot, model_rng);
      }
      const double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
      add_records(out, result, day, model, n_used, degraded, failure, elapsed);
    }
  }
  return out;
}

double CoverageCell::coverage() const {
  return count == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(count);
}

double CoverageCell::mean_width() const {
  return count == 0 ? 0.0
                    : static_cast<double>(width_sum) / static_cast<double>(count);
}

const CoverageCell& CoverageTable::at(ModelKind model, Target target,
                                      IntervalKind kind) const {
  const auto it = cells.find({model, target, kind});
  if (it == cells.end()) throw InvalidArgument("no coverage cell for that key");
  return it->second;
}

CoverageTable coverage_table(const std::vector<BacktestRecord>& records) {
  CoverageTable table;
  for (const auto& r : records) {
    for (const PredictionInterval* iv : {&r.plugin, &r.bootstrap}) {
      CoverageCell& cell = table.cells[{r.model, r.target, iv->kind}];
      ++cell.count;
      if (iv->contains(r.actual)) ++cell.covered;
      cell.width_sum += iv->width();
      if (r.degraded) ++cell.degraded;
    }
  }
  return table;
}

void write_coverage_csv(const CoverageTable& table, std::ostream& out) {
  out << "model,target,interval,covered,count,coverage,mean_width\n";
  for (const auto& [key, cell] : table.cells) {
    const auto& [model, target, kind] = key;
    out << to_string(model) << ',' << to_string(target) << ',' << to_string(kind)
        << ',' << cell.covered << ',' << cell.count << ','
        << format_fixed(cell.coverage()) << ',' << format_fixed(cell.mean_width())
        << '\n';
  }
}

void write_coverage_matrix_csv(const CoverageTable& table, std::ostream& out) {
  out << "model,plugin_acu,bootstrap_acu,plugin_icu,bootstrap_icu\n";
  for (ModelKind model : kAllModels) {
    if (!table.cells.contains({model, Target::acu, IntervalKind::plugin})) continue;
    out << to_string(model);
    for (Target target : {Target::acu, Target::icu}) {
      for (IntervalKind kind : {IntervalKind::plugin, IntervalKind::bootstrap}) {
        const auto it = table.cells.find({model, target, kind});
        out << ',' << (it == table.cells.end() ? std::string("")
                                               : format_fixed(it->second.coverage()));
      }
    }
    out << '\n';
  }
}

nlohmann::json coverage_json(const CoverageTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, cell] : table.cells) {
    const auto& [model, target, kind] = key;
    rows.push_back({{"model", to_string(model)},
                    {"target", to_string(target)},
                    {"interval", to_string(kind)},
                    {"covered", cell.covered},
                    {"count", cell.count},
                    {"coverage", cell.coverage()},
                    {"mean_width", cell.mean_width()},
                    {"degraded", cell.degraded}});
  }
  return {{"schema", 1}, {"coverage", rows}};
}

void write_traces_csv(const std::vector<BacktestRecord>& records, std::ostream& out) {
  out << "day,model,target,kind,lower,upper,actual\n";
  for (const auto& r : records) {
    for (const PredictionInterval* iv : {&r.plugin, &r.bootstrap}) {
      out << r.eval_day << ',' << to_string(r.model) << ',' << to_string(r.target)
          << ',' << to_string(iv->kind) << ',' << iv->lower << ',' << iv->upper
          << ',' << r.actual << '\n';
    }
  }
}

}  // namespace hdemand
