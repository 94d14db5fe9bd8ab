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

#include "hdemand/run.hpp"

#include <chrono>
#include <fstream>
#include <string>

#include "hdemand/error.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/io.hpp"
#include "hdemand/moments.hpp"

namespace hdemand {
namespace {

using nlohmann::json;

json interval_pair(const PredictionInterval& iv) { return json::array({iv.lower, iv.upper}); }

json target_block(const PredictionInterval& plugin, const PredictionInterval& boot,
                  std::int64_t z_lower, std::int64_t z_upper,
                  const std::optional<double>& threshold) {
  json block = {{"plugin", interval_pair(plugin)},
                {"bootstrap", interval_pair(boot)},
                {"corrections", {{"z_lower", z_lower}, {"z_upper", z_upper}}}};
  if (threshold) {
    block["threshold_exceeded"] = {
        {"plugin", static_cast<double>(plugin.upper) > *threshold},
        {"bootstrap", static_cast<double>(boot.upper) > *threshold}};
  }
  return block;
}

std::ofstream create(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

BootstrapConfig RunConfig::bootstrap() const {
  BootstrapConfig c;
  c.delta = delta;
  c.alpha = alpha;
  c.replicates = boot_reps;
  c.mc_samples = mc_samples;
  c.horizon_r = horizon_r;
  c.threads = threads;
  return c;
}

BacktestConfig RunConfig::backtest() const {
  BacktestConfig c;
  c.delta = delta;
  c.alpha = alpha;
  c.replicates = boot_reps;
  c.mc_samples = mc_samples;
  c.seed = seed;
  c.threads = threads;
  return c;
}

std::vector<ModelKind> parse_model_selection(std::string_view name) {
  if (name == "all") return {kAllModels.begin(), kAllModels.end()};
  return {parse_model_kind(name)};
}

ForecastRun run_forecast(const RunConfig& config, const HistoryWindow& history,
                         double forecast_r) {
  if (config.models.empty()) throw ConfigError("no model selected");
  if (config.horizon_r < 0) throw ConfigError("horizon must be non-negative");
  if (!(forecast_r > 0.0) || !std::isfinite(forecast_r)) {
    throw InvalidForecast("forecast F_r must be positive");
  }
  if (history.empty()) throw InsufficientHistory("empty history window");

  const BootstrapConfig boot = config.bootstrap();
  const RngStream root(config.seed, 0);

  ForecastRun run;
  json models = json::array();
  for (ModelKind kind : config.models) {
    const auto started = std::chrono::steady_clock::now();
    const RngStream model_rng = root.split(static_cast<std::uint64_t>(kind));

    ModelForecast mf;
    mf.kind = kind;
    ErrorModelParams fitted = ErrorModelParams::perfect();
    if (kind != ModelKind::perfect) fitted = fit_model(kind, moment_stats(history));
    mf.result = bootstrap_with_params(history, fitted, forecast_r, boot, model_rng.split(0));
    RngStream regional_rng = model_rng.split(1);
    mf.regional = plugin_regional(forecast_r, fitted, config.delta, config.mc_samples,
                                  regional_rng, config.horizon_r);
    mf.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const PredictionResult& r = mf.result;
    const BootstrapCorrections& z = r.corrections;
    models.push_back(
        {{"model", to_string(kind)},
         {"fitted",
          {{"mu", r.fitted.mu},
           {"sigma2", r.fitted.sigma2},
           {"rho", r.fitted.rho},
           {"objective", r.fitted.objective_value}}},
         {"shares",
          {{"p_hat", r.shares.p_hat},
           {"q_hat", r.shares.q_hat},
           {"total_a", r.shares.total_a},
           {"total_b", r.shares.total_b},
           {"total_n", r.shares.total_n}}},
         {"regional", {{"plugin", interval_pair(mf.regional)}}},
         {"acu", target_block(r.plugin_a, r.bootstrap_a, z.z_a_lower, z.z_a_upper,
                              config.threshold)},
         {"icu", target_block(r.plugin_b, r.bootstrap_b, z.z_b_lower, z.z_b_upper,
                              config.threshold)},
         {"redraws", z.redraws},
         {"elapsed_seconds", mf.elapsed_seconds}});
    run.models.push_back(std::move(mf));
  }

  json model_names = json::array();
  for (ModelKind kind : config.models) model_names.push_back(to_string(kind));
  json cfg = {{"models", model_names},
              {"delta", config.delta},
              {"alpha", config.alpha},
              {"boot_reps", config.boot_reps},
              {"mc_samples", config.mc_samples},
              {"horizon", config.horizon_r}};
  if (config.threshold) cfg["threshold"] = *config.threshold;

  run.report = {{"schema", kReportSchema},
                {"seed", config.seed},
                {"config", cfg},
                {"history",
                 {{"n", history.size()},
                  {"first_day", history.first_day()},
                  {"last_day", history.last_day()}}},
                {"target_day", history.last_day() + config.horizon_r},
                {"forecast_r", forecast_r},
                {"models", models}};
  return run;
}

StudyResult run_synthetic_study(const StudyConfig& config) {
  if (config.eval_days < 1) throw ConfigError("evaluation window must be non-empty");
  if (config.stride < 1) throw ConfigError("evaluation stride must be positive");
  if (config.eval_days > config.sir.horizon_days) {
    throw ConfigError("evaluation window longer than the scenario");
  }

  std::optional<Ar1Params> error = config.error;
  if (config.regime != ModelKind::perfect && !error) {
    error = default_error_params(config.regime).ar1();
  }

  StudyResult study;
  study.scenario = generate_scenario(config.regime, config.sir, config.p, config.q,
                                     error, RngStream(config.run.seed, 3));
  const std::int64_t start = config.sir.horizon_days - config.eval_days;
  study.records = rolling_backtest(study.scenario.history, start, config.run.horizon_r,
                                   config.stride, config.run.models,
                                   config.run.backtest());
  study.table = coverage_table(study.records);
  return study;
}

void write_backtest_outputs(const std::vector<BacktestRecord>& records,
                            const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const CoverageTable table = coverage_table(records);
  {
    auto out = create(dir / "coverage.csv");
    write_coverage_csv(table, out);
  }
  {
    auto out = create(dir / "coverage_matrix.csv");
    write_coverage_matrix_csv(table, out);
  }
  {
    auto out = create(dir / "coverage.json");
    out << coverage_json(table).dump(2) << '\n';
  }
  {
    auto out = create(dir / "traces.csv");
    write_traces_csv(records, out);
  }
}

void write_study_outputs(const StudyResult& study, const std::filesystem::path& dir) {
  write_backtest_outputs(study.records, dir);
  auto out = create(dir / "scenario.csv");
  write_history_csv(study.scenario.history, out);
}

}  // namespace hdemand
