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
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdemand/history.hpp"
#include "hdemand/intervals.hpp"
#include "hdemand/model.hpp"

namespace hdemand {

struct BacktestConfig {
  double delta = 0.05;
  double alpha = 0.05;
  std::int64_t replicates = 1000;
  std::int64_t mc_samples = kDefaultMcSamples;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct BacktestRecord {
  std::int64_t eval_day = 0;
  ModelKind model = ModelKind::perfect;
  Target target = Target::acu;
  PredictionInterval plugin;
  PredictionInterval bootstrap;
  std::int64_t actual = 0;
  std::int64_t n_used = 0;
  // Fit or bootstrap failed; intervals are the perfect-model fallback.
  bool degraded = false;
  std::string failure;
  double elapsed_seconds = 0.0;
};

/// Expanding-window backtest. Evaluation indices run from start_index in
/// steps of `stride` to the end of the series; at index t each model is fit
/// on records [0, t - horizon_r + 1) and predicts the ACU and ICU census at t
/// from the forecast F_t. Emits one record per (day, model, target).
/// Throws ConfigError if the first window has fewer than 2 days.
std::vector<BacktestRecord> rolling_backtest(const HistoryWindow& series,
                                             std::int64_t start_index,
                                             std::int64_t horizon_r,
                                             std::int64_t stride,
                                             const std::vector<ModelKind>& models,
                                             const BacktestConfig& config);

struct CoverageCell {
  std::int64_t covered = 0;
  std::int64_t count = 0;
  std::int64_t width_sum = 0;
  std::int64_t degraded = 0;

  double coverage() const;
  double mean_width() const;
};

using CoverageKey = std::tuple<ModelKind, Target, IntervalKind>;

struct CoverageTable {
  std::map<CoverageKey, CoverageCell> cells;

  const CoverageCell& at(ModelKind model, Target target, IntervalKind kind) const;
};

/// Fraction of records with lower <= actual <= upper per
/// (model, target, interval kind), with mean widths (upper - lower).
CoverageTable coverage_table(const std::vector<BacktestRecord>& records);

/// Long form: model,target,interval,covered,count,coverage,mean_width
void write_coverage_csv(const CoverageTable& table, std::ostream& out);
/// One row per model with plug-in/bootstrap columns for ACU and ICU.
void write_coverage_matrix_csv(const CoverageTable& table, std::ostream& out);
nlohmann::json coverage_json(const CoverageTable& table);
/// day,model,target,kind,lower,upper,actual
void write_traces_csv(const std::vector<BacktestRecord>& records, std::ostream& out);

// Checks that the moment statistics are consistent estimators.

struct ConsistencyConfig {
  std::uint64_t seed = 7;
  double lambda = 50.0;
  std::int64_t n_large = 20000;
  std::int64_t replications = 200;
  std::int64_t n_small = 500;
  std::int64_t n_big = 2000;
};

struct ConsistencyCheck {
  std::string name;
  double statistic = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool passed = false;
};

struct ConsistencyReport {
  std::vector<ConsistencyCheck> checks;
  bool all_passed() const;
};

/// Perfect-forecast simulations at constant lambda: the moment statistics
/// at large n lie within 0.02 of 1, their means over replicated windows lie
/// within 3 standard errors of 1, Var(M1) shrinks like 1/n (ratio between
/// n_small and n_big in [2, 8]) and stays below 2 / (n lambda).
ConsistencyReport consistency_suite(const ConsistencyConfig& config = {});

}  // namespace hdemand
