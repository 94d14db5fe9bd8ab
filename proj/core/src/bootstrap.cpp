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

#include "hdemand/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "hdemand/ar1.hpp"
#include "hdemand/error.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/moments.hpp"
#include "hdemand/parallel.hpp"
#include "hdemand/sampling.hpp"

namespace hdemand {
namespace {

constexpr int kMaxDrawsPerReplicate = 100;
constexpr double kMaxFitFailureFraction = 0.10;

// Substream layout under the caller's stream.
enum StreamTag : std::uint64_t {
  kBaseStream = 0,
  kReplicateStream = 1,
};
enum ReplicateTag : std::uint64_t {
  kErrorPath = 0,
  kCounts = 1,
  kSplit = 2,
  kMonteCarloA = 3,
  kMonteCarloB = 4,
};

struct ReplicateOutcome {
  std::optional<ReplicateEndpoints> endpoints;
  std::int64_t empty_redraws = 0;
  std::int64_t fit_redraws = 0;
};

void check_config(const BootstrapConfig& config) {
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1)");
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1)");
  }
  if (config.replicates < 1) throw InvalidArgument("bootstrap needs b >= 1");
  if (config.mc_samples < 1) throw InvalidArgument("Monte Carlo needs m >= 1");
}

PredictionInterval endpoints_at(double f, const ErrorModelParams& params,
                                const BootstrapConfig& config, RngStream rng,
                                Target target) {
  return plugin_interval(f, params, config.delta, config.mc_samples, rng,
                         target, config.horizon_r);
}

ReplicateOutcome run_replicate(const HistoryWindow& history,
                               const std::vector<double>& forecasts,
                               const ErrorModelParams& fitted,
                               const ShareEstimates& shares, double forecast_r,
                               const BootstrapConfig& config,
                               const RngStream& replicate_rng) {
  const std::size_t n = history.size();
  ReplicateOutcome out;
  std::vector<double> means(n);
  std::vector<std::int64_t> counts(n);

  for (int attempt = 0; attempt < kMaxDrawsPerReplicate; ++attempt) {
    const RngStream draw_rng = replicate_rng.split(static_cast<std::uint64_t>(attempt));

    if (fitted.kind == ModelKind::perfect) {
      means = forecasts;
    } else {
      RngStream path_rng = draw_rng.split(kErrorPath);
      const Ar1LognormalPath path = sample_ar1_path(fitted.ar1(), n, path_rng);
      for (std::size_t j = 0; j < n; ++j) means[j] = forecasts[j] * path.gamma[j];
    }

    RngStream count_rng = draw_rng.split(kCounts);
    std::int64_t total_n = 0;
    for (std::size_t j = 0; j < n; ++j) {
      counts[j] = sample_poisson(means[j], count_rng);
      total_n += counts[j];
    }
    if (total_n == 0) {
      ++out.empty_redraws;
      continue;
    }

    ErrorModelParams refit = ErrorModelParams::perfect();
    if (fitted.kind != ModelKind::perfect) {
      try {
        refit = fit_model(fitted.kind, moment_stats(counts, forecasts));
      } catch (const FitFailure&) {
        ++out.fit_redraws;
        continue;
      }
    }

    RngStream split_rng = draw_rng.split(kSplit);
    std::int64_t total_a = 0, total_b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const MultinomialSplit s =
          sample_multinomial_split(counts[j], shares.p_hat, shares.q_hat, split_rng);
      total_a += s.a;
      total_b += s.b;
    }
    const ShareEstimates star = shares_from_totals(total_a, total_b, total_n);

    const PredictionInterval a = endpoints_at(
        star.p_hat * forecast_r, refit, config, draw_rng.split(kMonteCarloA), Target::acu);
    const PredictionInterval b = endpoints_at(
        star.q_hat * forecast_r, refit, config, draw_rng.split(kMonteCarloB), Target::icu);
    out.endpoints = ReplicateEndpoints{a.lower, a.upper, b.lower, b.upper};
    return out;
  }
  return out;
}

PredictionInterval corrected(const PredictionInterval& plugin, std::int64_t z_lower,
                             std::int64_t z_upper) {
  PredictionInterval out = plugin;
  out.kind = IntervalKind::bootstrap;
  out.lower = std::max<std::int64_t>(plugin.lower - z_lower, 0);
  // Keep the interval well-formed if the replicate distribution is wildly
  // shifted above the base endpoints.
  out.upper = std::max(plugin.upper - z_upper, out.lower);
  return out;
}

}  // namespace

CorrectionPair corrections_from_replicates(std::int64_t base_lower,
                                           std::int64_t base_upper,
                                           std::span<const std::int64_t> rep_lowers,
                                           std::span<const std::int64_t> rep_uppers,
                                           double alpha) {
  if (rep_lowers.empty() || rep_lowers.size() != rep_uppers.size()) {
    throw InvalidArgument("replicate endpoint sets must be non-empty and equal length");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");

  const std::size_t b = rep_lowers.size();
  const double bd = static_cast<double>(b);
  const double level = 1.0 - alpha;

  // Smallest count k with k / b >= 1 - alpha.
  std::size_t k = 1;
  while (k < b && static_cast<double>(k) / bd < level) ++k;

  std::vector<std::int64_t> d(b), e(b);
  for (std::size_t i = 0; i < b; ++i) {
    d[i] = rep_lowers[i] - base_lower;
    e[i] = rep_uppers[i] - base_upper;
  }
  std::sort(d.begin(), d.end());
  std::sort(e.begin(), e.end());
  // #{d_i <= z} >= k  <=>  z >= d_(k-1);  #{e_i >= z} >= k  <=>  z <= e_(b-k).
  return {d[k - 1], e[b - k]};
}

PredictionResult bootstrap_with_params(const HistoryWindow& history,
                                       const ErrorModelParams& fitted,
                                       double forecast_r,
                                       const BootstrapConfig& config,
                                       const RngStream& rng) {
  check_config(config);
  if (!(forecast_r > 0.0) || !std::isfinite(forecast_r)) {
    throw InvalidForecast("forecast F_r must be positive");
  }
  if (history.empty()) throw InsufficientHistory("empty history window");
  if (fitted.kind != ModelKind::perfect) check_ar1_params(fitted.ar1());

  PredictionResult result;
  result.fitted = fitted;
  result.shares = estimate_shares(history);

  const RngStream base_rng = rng.split(kBaseStream);
  result.plugin_a = endpoints_at(result.shares.p_hat * forecast_r, fitted, config,
                                 base_rng.split(0), Target::acu);
  result.plugin_b = endpoints_at(result.shares.q_hat * forecast_r, fitted, config,
                                 base_rng.split(1), Target::icu);

  const auto b = static_cast<std::size_t>(config.replicates);
  const std::vector<double> forecasts = history.forecasts();
  const RngStream replicate_root = rng.split(kReplicateStream);
  std::vector<ReplicateOutcome> outcomes(b);
  parallel_for(b, config.threads, [&](std::size_t i) {
    outcomes[i] = run_replicate(history, forecasts, fitted, result.shares,
                                forecast_r, config, replicate_root.split(i));
  });

  std::int64_t fit_redraws = 0, redraws = 0;
  for (const auto& o : outcomes) {
    fit_redraws += o.fit_redraws;
    redraws += o.fit_redraws + o.empty_redraws;
  }
  for (std::size_t i = 0; i < b; ++i) {
    if (!outcomes[i].endpoints) {
      throw BootstrapFailure("bootstrap replicate " + std::to_string(i) +
                             " failed after " + std::to_string(kMaxDrawsPerReplicate) +
                             " draws");
    }
  }
  const auto fit_cap = static_cast<std::int64_t>(
      std::ceil(kMaxFitFailureFraction * static_cast<double>(b)));
  if (fit_redraws > fit_cap) {
    throw BootstrapFailure(std::to_string(fit_redraws) +
                           " replicate refits failed (limit " +
                           std::to_string(fit_cap) + ")");
  }

  result.replicates.reserve(b);
  std::vector<std::int64_t> al(b), au(b), bl(b), bu(b);
  for (std::size_t i = 0; i < b; ++i) {
    const ReplicateEndpoints& r = *outcomes[i].endpoints;
    result.replicates.push_back(r);
    al[i] = r.a_lower;
    au[i] = r.a_upper;
    bl[i] = r.b_lower;
    bu[i] = r.b_upper;
  }
  const CorrectionPair za = corrections_from_replicates(
      result.plugin_a.lower, result.plugin_a.upper, al, au, config.alpha);
  const CorrectionPair zb = corrections_from_replicates(
      result.plugin_b.lower, result.plugin_b.upper, bl, bu, config.alpha);

  result.corrections = {za.lower, za.upper, zb.lower, zb.upper,
                        config.alpha, config.replicates, redraws};
  result.bootstrap_a = corrected(result.plugin_a, za.lower, za.upper);
  result.bootstrap_b = corrected(result.plugin_b, zb.lower, zb.upper);
  return result;
}

PredictionResult bootstrap_predict(ModelKind kind, const HistoryWindow& history,
                                   double forecast_r,
                                   const BootstrapConfig& config,
                                   const RngStream& rng) {
  ErrorModelParams fitted = ErrorModelParams::perfect();
  if (kind != ModelKind::perfect) fitted = fit_model(kind, moment_stats(history));
  return bootstrap_with_params(history, fitted, forecast_r, config, rng);
}

PredictionResult bootstrap_perfect(const HistoryWindow& history,
                                   double forecast_r,
                                   const BootstrapConfig& config,
                                   const RngStream& rng) {
  return bootstrap_predict(ModelKind::perfect, history, forecast_r, config, rng);
}

PredictionResult bootstrap_unbiased(const HistoryWindow& history,
                                    double forecast_r,
                                    const BootstrapConfig& config,
                                    const RngStream& rng) {
  return bootstrap_predict(ModelKind::unbiased, history, forecast_r, config, rng);
}

PredictionResult bootstrap_biased(const HistoryWindow& history,
                                  double forecast_r,
                                  const BootstrapConfig& config,
                                  const RngStream& rng) {
  return bootstrap_predict(ModelKind::biased, history, forecast_r, config, rng);
}

}  // namespace hdemand
