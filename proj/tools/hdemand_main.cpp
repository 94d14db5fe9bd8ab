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

// hdemand: hospital-level ACU/ICU census prediction intervals from regional
// Poisson forecasts.
//
//   hdemand --history h.csv --forecast-r 120 [--model all] [--out report.json]
//   hdemand synth --regime unbiased --out study/
//   hdemand backtest --history h.csv --start 30 --out bt/

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hdemand/error.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/io.hpp"
#include "hdemand/run.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kValidation = 3,
  kFitFailure = 4,
  kRuntime = 5,
  kUsage = 64,
};

struct Options {
  std::string model = "all";
  double delta = 0.05;
  double alpha = 0.05;
  std::int64_t boot_reps = 1000;
  std::int64_t mc_samples = 300;
  std::int64_t horizon = 7;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string history;
  std::string forecasts;
  std::optional<double> forecast_r;
  std::optional<double> threshold;
  std::string out;

  // synth
  std::string regime = "perfect";
  std::string fit_model;
  double p = 0.05;
  double q = 0.02;
  std::int64_t days = 100;
  std::int64_t eval_days = 60;
  double peak = 500.0;
  double beta = 0.25;
  double gamma_rec = 0.1;
  double population = 1e6;
  double initial_infected = 100.0;

  // backtest
  std::int64_t start = -1;
  std::int64_t stride = 0;
};

hdemand::RunConfig run_config(const Options& o, const std::string& model) {
  hdemand::RunConfig c;
  c.models = hdemand::parse_model_selection(model);
  c.delta = o.delta;
  c.alpha = o.alpha;
  c.boot_reps = o.boot_reps;
  c.mc_samples = o.mc_samples;
  c.horizon_r = o.horizon;
  c.seed = o.seed;
  c.threads = o.threads;
  c.threshold = o.threshold;
  return c;
}

void print_interval(const char* label, const hdemand::PredictionInterval& iv) {
  std::printf("  %-10s [%lld, %lld]", label, static_cast<long long>(iv.lower),
              static_cast<long long>(iv.upper));
}

int run_forecast_command(const Options& o) {
  if (o.history.empty()) throw hdemand::ConfigError("--history is required");
  const hdemand::HistoryWindow history = hdemand::ingest_history(o.history);
  const hdemand::RunConfig config = run_config(o, o.model);

  double forecast_r = 0.0;
  if (o.forecast_r) {
    forecast_r = *o.forecast_r;
  } else if (!o.forecasts.empty()) {
    const auto table = hdemand::read_forecasts(o.forecasts);
    const std::int64_t target = history.last_day() + config.horizon_r;
    const auto it = table.find(target);
    if (it == table.end()) {
      throw hdemand::ConfigError("no forecast for target day " + std::to_string(target) +
                                 " in " + o.forecasts);
    }
    forecast_r = it->second;
  } else {
    throw hdemand::ConfigError("one of --forecast-r or --forecasts is required");
  }

  const hdemand::ForecastRun run = hdemand::run_forecast(config, history, forecast_r);
  std::printf("target day %lld (horizon %lld), F_r = %g, level %.0f%%\n",
              static_cast<long long>(history.last_day() + config.horizon_r),
              static_cast<long long>(config.horizon_r), forecast_r,
              100.0 * (1.0 - config.delta));
  for (const auto& m : run.models) {
    std::printf("%s (p_hat %.4f, q_hat %.4f)\n", std::string(hdemand::to_string(m.kind)).c_str(),
                m.result.shares.p_hat, m.result.shares.q_hat);
    print_interval("regional", m.regional);
    std::printf("\n");
    print_interval("ACU plug", m.result.plugin_a);
    print_interval("boot", m.result.bootstrap_a);
    std::printf("\n");
    print_interval("ICU plug", m.result.plugin_b);
    print_interval("boot", m.result.bootstrap_b);
    std::printf("\n");
    if (config.threshold) {
      std::printf("  threshold %g: ACU %s, ICU %s\n", *config.threshold,
                  static_cast<double>(m.result.bootstrap_a.upper) > *config.threshold
                      ? "EXCEEDED" : "below",
                  static_cast<double>(m.result.bootstrap_b.upper) > *config.threshold
                      ? "EXCEEDED" : "below");
    }
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw hdemand::Error("cannot write '" + o.out + "'");
    out << run.report.dump(2) << '\n';
  }
  return kOk;
}

void print_coverage(const hdemand::CoverageTable& table) {
  hdemand::write_coverage_matrix_csv(table, std::cout);
}

int run_synth_command(const Options& o) {
  if (o.out.empty()) throw hdemand::ConfigError("--out directory is required");
  hdemand::StudyConfig study;
  study.regime = hdemand::parse_model_kind(o.regime);
  study.run = run_config(o, o.fit_model.empty() ? o.regime : o.fit_model);
  hdemand::SirParams sir;
  sir.beta = o.beta;
  sir.gamma_rec = o.gamma_rec;
  sir.population = o.population;
  sir.initial_infected = o.initial_infected;
  sir.horizon_days = o.days;
  study.sir = hdemand::calibrate_census_scale(sir, o.peak);
  study.p = o.p;
  study.q = o.q;
  study.eval_days = o.eval_days;
  study.stride = o.stride > 0 ? o.stride : 1;

  const hdemand::StudyResult result = hdemand::run_synthetic_study(study);
  hdemand::write_study_outputs(result, o.out);
  std::fprintf(stderr, "wrote study outputs to %s\n", o.out.c_str());
  print_coverage(result.table);
  return kOk;
}

int run_backtest_command(const Options& o) {
  if (o.history.empty()) throw hdemand::ConfigError("--history is required");
  if (o.out.empty()) throw hdemand::ConfigError("--out directory is required");
  const hdemand::HistoryWindow series = hdemand::ingest_history(o.history);
  const hdemand::RunConfig config = run_config(o, o.model);
  const std::int64_t start = o.start >= 0 ? o.start : config.horizon_r + 1;
  const auto records = hdemand::rolling_backtest(
      series, start, config.horizon_r, o.stride > 0 ? o.stride : 7, config.models,
      config.backtest());
  hdemand::write_backtest_outputs(records, o.out);
  std::fprintf(stderr, "wrote backtest outputs to %s\n", o.out.c_str());
  print_coverage(hdemand::coverage_table(records));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hospital ACU/ICU census prediction intervals"};
  app.fallthrough();
  Options o;

  app.add_option("--model", o.model, "perfect, unbiased, biased or all")
      ->capture_default_str();
  app.add_option("--delta", o.delta, "1 - prediction level")->capture_default_str();
  app.add_option("--alpha", o.alpha, "1 - bootstrap confidence")->capture_default_str();
  app.add_option("--boot-reps", o.boot_reps, "bootstrap replicates b")
      ->capture_default_str();
  app.add_option("--mc-samples", o.mc_samples, "Monte Carlo draws m per interval")
      ->capture_default_str();
  app.add_option("--horizon", o.horizon, "days ahead r")->capture_default_str();
  app.add_option("--seed", o.seed, "master seed")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--history", o.history, "history CSV");
  app.add_option("--forecasts", o.forecasts, "future forecasts CSV (day,regional_forecast)");
  app.add_option("--forecast-r", o.forecast_r, "regional forecast for the target day");
  app.add_option("--threshold", o.threshold, "flag upper endpoints above this census");
  app.add_option("--out", o.out, "JSON report path (forecast) or output directory");

  CLI::App* synth = app.add_subcommand("synth", "synthetic coverage study");
  synth->add_option("--regime", o.regime, "data-generating regime")->capture_default_str();
  synth->add_option("--fit", o.fit_model, "models to fit (default: the regime)");
  synth->add_option("--p", o.p, "true ACU share")->capture_default_str();
  synth->add_option("--q", o.q, "true ICU share")->capture_default_str();
  synth->add_option("--days", o.days, "scenario length")->capture_default_str();
  synth->add_option("--eval-days", o.eval_days, "evaluate on the last N days")
      ->capture_default_str();
  synth->add_option("--stride", o.stride, "days between evaluations (default 1)");
  synth->add_option("--peak", o.peak, "peak expected regional census")
      ->capture_default_str();
  synth->add_option("--beta", o.beta, "SIR transmission rate")->capture_default_str();
  synth->add_option("--gamma", o.gamma_rec, "SIR recovery rate")->capture_default_str();
  synth->add_option("--population", o.population)->capture_default_str();
  synth->add_option("--initial-infected", o.initial_infected)->capture_default_str();

  CLI::App* backtest = app.add_subcommand("backtest", "rolling backtest on a history file");
  backtest->add_option("--start", o.start, "first evaluation index (default horizon + 1)");
  backtest->add_option("--stride", o.stride, "days between evaluations (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*synth) return run_synth_command(o);
    if (*backtest) return run_backtest_command(o);
    return run_forecast_command(o);
  } catch (const hdemand::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kParse;
  } catch (const hdemand::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kValidation;
  } catch (const hdemand::FitFailure& e) {
    std::fprintf(stderr, "fit failure: %s\n", e.what());
    return kFitFailure;
  } catch (const hdemand::InfeasibleMoments& e) {
    std::fprintf(stderr, "fit failure: %s\n", e.what());
    return kFitFailure;
  } catch (const hdemand::BootstrapFailure& e) {
    std::fprintf(stderr, "fit failure: %s\n", e.what());
    return kFitFailure;
  } catch (const hdemand::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kValidation;
  } catch (const hdemand::InvalidArgument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kValidation;
  } catch (const hdemand::InvalidForecast& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kValidation;
  } catch (const hdemand::DegenerateHistory& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kValidation;
  } catch (const hdemand::InsufficientHistory& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime error: %s\n", e.what());
    return kRuntime;
  }
}
