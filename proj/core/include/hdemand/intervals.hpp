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
#include <string_view>

#include "hdemand/model.hpp"
#include "hdemand/rng.hpp"

namespace hdemand {

enum class IntervalKind { plugin = 0, bootstrap = 1 };
enum class Target { regional = 0, acu = 1, icu = 2 };

std::string_view to_string(IntervalKind kind);
std::string_view to_string(Target target);

/// Integer prediction interval [lower, upper] at level 1 - delta.
struct PredictionInterval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  double level = 0.95;
  IntervalKind kind = IntervalKind::plugin;
  Target target = Target::regional;
  std::int64_t horizon_r = 0;

  bool contains(std::int64_t x) const { return lower <= x && x <= upper; }
  bool contains(const PredictionInterval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  std::int64_t width() const { return upper - lower; }
};

// Monte Carlo sample count for the mixture endpoints. At 300 draws the
// endpoints jitter by one or two integers between seeds.
inline constexpr std::int64_t kDefaultMcSamples = 300;

/// Plug-in interval for a Poisson mean f = scale under the fitted error model:
/// exact Poisson endpoints for perfect forecasts, Monte Carlo mixture
/// endpoints otherwise. f == 0 yields [0, 0].
PredictionInterval plugin_interval(double f, const ErrorModelParams& params,
                                   double delta, std::int64_t m,
                                   RngStream& rng, Target target,
                                   std::int64_t horizon_r = 0);

/// Interval for the regional census N_r given its forecast F_r.
PredictionInterval plugin_regional(double forecast_r,
                                   const ErrorModelParams& params, double delta,
                                   std::int64_t m, RngStream& rng,
                                   std::int64_t horizon_r = 0);

/// Interval for a hospital unit census with the given share of F_r.
PredictionInterval plugin_hospital(double share, double forecast_r,
                                   const ErrorModelParams& params, double delta,
                                   std::int64_t m, RngStream& rng,
                                   Target target = Target::acu,
                                   std::int64_t horizon_r = 0);

}  // namespace hdemand
