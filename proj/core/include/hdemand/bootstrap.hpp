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
#include <span>
#include <vector>

#include "hdemand/history.hpp"
#include "hdemand/intervals.hpp"
#include "hdemand/model.hpp"
#include "hdemand/rng.hpp"
#include "hdemand/shares.hpp"

namespace hdemand {

struct BootstrapConfig {
  double delta = 0.05;
  double alpha = 0.05;
  std::int64_t replicates = 1000;
  std::int64_t mc_samples = kDefaultMcSamples;
  std::int64_t horizon_r = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Integer endpoint shifts estimated by the parametric bootstrap. The
/// corrected interval is [max(l - z_lower, 0), u - z_upper].
struct BootstrapCorrections {
  std::int64_t z_a_lower = 0;
  std::int64_t z_a_upper = 0;
  std::int64_t z_b_lower = 0;
  std::int64_t z_b_upper = 0;
  double alpha = 0.05;
  std::int64_t replicates_b = 0;
  std::int64_t redraws = 0;  // replicates discarded and drawn again
};

struct ReplicateEndpoints {
  std::int64_t a_lower = 0;
  std::int64_t a_upper = 0;
  std::int64_t b_lower = 0;
  std::int64_t b_upper = 0;
};

struct PredictionResult {
  PredictionInterval plugin_a;
  PredictionInterval bootstrap_a;
  PredictionInterval plugin_b;
  PredictionInterval bootstrap_b;
  BootstrapCorrections corrections;
  ErrorModelParams fitted;
  ShareEstimates shares;
  std::vector<ReplicateEndpoints> replicates;
};

struct CorrectionPair {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// z_lower = smallest z with #{l_i - l <= z} / b >= 1 - alpha;
/// z_upper = largest z with #{u_i - u >= z} / b >= 1 - alpha.
CorrectionPair corrections_from_replicates(std::int64_t base_lower,
                                           std::int64_t base_upper,
                                           std::span<const std::int64_t> rep_lowers,
                                           std::span<const std::int64_t> rep_uppers,
                                           double alpha);

/// Resampling scheme shared by all three models, given already-fitted error
/// parameters (fitted.kind selects the model). Each replicate i draws from
/// rng substreams only, so the result is identical for any thread count.
///
/// Per replicate: simulate the error path (lognormal kinds), draw regional
/// counts N_j* ~ Poisson(F_j exp(Y_j*)), refit the error model on the
/// simulated moments, split N_j* multinomially with the fitted shares,
/// re-estimate the shares and recompute the four endpoints at F_r.
/// Replicates with zero simulated census, or whose refit fails, are drawn
/// again; BootstrapFailure if a replicate needs more than 100 draws or fit
/// failures exceed 10% of b.
PredictionResult bootstrap_with_params(const HistoryWindow& history,
                                       const ErrorModelParams& fitted,
                                       double forecast_r,
                                       const BootstrapConfig& config,
                                       const RngStream& rng);

PredictionResult bootstrap_perfect(const HistoryWindow& history,
                                   double forecast_r,
                                   const BootstrapConfig& config,
                                   const RngStream& rng);

/// Fits the unbiased error model on the window, then bootstraps.
PredictionResult bootstrap_unbiased(const HistoryWindow& history,
                                    double forecast_r,
                                    const BootstrapConfig& config,
                                    const RngStream& rng);

/// Fits the biased error model on the window, then bootstraps.
PredictionResult bootstrap_biased(const HistoryWindow& history,
                                  double forecast_r,
                                  const BootstrapConfig& config,
                                  const RngStream& rng);

PredictionResult bootstrap_predict(ModelKind kind, const HistoryWindow& history,
                                   double forecast_r,
                                   const BootstrapConfig& config,
                                   const RngStream& rng);

}  // namespace hdemand
