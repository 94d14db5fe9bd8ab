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
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdemand/bootstrap.hpp"
#include "hdemand/evaluation.hpp"
#include "hdemand/history.hpp"
#include "hdemand/model.hpp"
#include "hdemand/synthetic.hpp"

namespace hdemand {

inline constexpr int kReportSchema = 1;

struct RunConfig {
  std::vector<ModelKind> models = {kAllModels.begin(), kAllModels.end()};
  double delta = 0.05;
  double alpha = 0.05;
  std::int64_t boot_reps = 1000;
  std::int64_t mc_samples = kDefaultMcSamples;
  std::int64_t horizon_r = 7;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::optional<double> threshold;

  BootstrapConfig bootstrap() const;
  BacktestConfig backtest() const;
};

/// "perfect", "unbiased", "biased" or "all".
std::vector<ModelKind> parse_model_selection(std::string_view name);

struct ModelForecast {
  ModelKind kind = ModelKind::perfect;
  PredictionResult result;
  PredictionInterval regional;
  double elapsed_seconds = 0.0;
};

struct ForecastRun {
  std::vector<ModelForecast> models;
  nlohmann::json report;
};

/// Fits each requested model on the whole history and predicts the census
/// horizon_r days after its last day from the regional forecast F_r.
/// Each model draws from its own seed-derived stream, so a model's block is
/// identical whether it runs alone or alongside the others. Timing fields
/// ("elapsed_seconds") are the only non-deterministic part of the report.
ForecastRun run_forecast(const RunConfig& config, const HistoryWindow& history,
                         double forecast_r);

struct StudyConfig {
  RunConfig run;
  ModelKind regime = ModelKind::perfect;
  SirParams sir = default_sir_params();
  double p = 0.05;
  double q = 0.02;
  std::optional<Ar1Params> error;  // defaults to default_error_params(regime)
  std::int64_t eval_days = 60;
  std::int64_t stride = 1;
};

struct StudyResult {
  SyntheticScenario scenario;
  std::vector<BacktestRecord> records;
  CoverageTable table;
};

/// Generates a scenario for the regime and backtests the configured models
/// over its last eval_days days. Throws ConfigError for an empty or
/// oversized evaluation window.
StudyResult run_synthetic_study(const StudyConfig& config);

/// Writes scenario.csv, coverage.csv, coverage_matrix.csv, coverage.json and
/// traces.csv into `dir` (created if missing).
void write_study_outputs(const StudyResult& study, const std::filesystem::path& dir);

/// Writes coverage.csv, coverage_matrix.csv, coverage.json and traces.csv.
void write_backtest_outputs(const std::vector<BacktestRecord>& records,
                            const std::filesystem::path& dir);

}  // namespace hdemand
