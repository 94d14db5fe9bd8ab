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

#include "hdemand/intervals.hpp"

#include <cmath>
#include <string>

#include "hdemand/error.hpp"
#include "hdemand/mixed_poisson.hpp"
#include "hdemand/poisson.hpp"

namespace hdemand {

std::string_view to_string(IntervalKind kind) {
  return kind == IntervalKind::plugin ? "plugin" : "bootstrap";
}

std::string_view to_string(Target target) {
  switch (target) {
    case Target::regional:
      return "regional";
    case Target::acu:
      return "acu";
    case Target::icu:
      return "icu";
  }
  return "unknown";
}

PredictionInterval plugin_interval(double f, const ErrorModelParams& params,
                                   double delta, std::int64_t m,
                                   RngStream& rng, Target target,
                                   std::int64_t horizon_r) {
  if (!std::isfinite(f) || f < 0.0) {
    throw InvalidArgument("interval mean must be finite and non-negative");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1), got " +
                          std::to_string(delta));
  }
  PredictionInterval out;
  out.level = 1.0 - delta;
  out.kind = IntervalKind::plugin;
  out.target = target;
  out.horizon_r = horizon_r;
  if (f == 0.0) return out;

  const PoissonEndpoints e =
      params.kind == ModelKind::perfect
          ? poisson_endpoints(f, delta)
          : mixed_poisson_endpoints(params.ar1(), f, delta, m, rng);
  out.lower = e.lower;
  out.upper = e.upper;
  return out;
}

PredictionInterval plugin_regional(double forecast_r,
                                   const ErrorModelParams& params, double delta,
                                   std::int64_t m, RngStream& rng,
                                   std::int64_t horizon_r) {
  if (!(forecast_r > 0.0)) throw InvalidForecast("forecast F_r must be positive");
  return plugin_interval(forecast_r, params, delta, m, rng, Target::regional,
                         horizon_r);
}

PredictionInterval plugin_hospital(double share, double forecast_r,
                                   const ErrorModelParams& params, double delta,
                                   std::int64_t m, RngStream& rng,
                                   Target target, std::int64_t horizon_r) {
  if (!(share >= 0.0 && share <= 1.0)) {
    throw InvalidArgument("share must lie in [0, 1]");
  }
  if (!(forecast_r > 0.0)) throw InvalidForecast("forecast F_r must be positive");
  return plugin_interval(share * forecast_r, params, delta, m, rng, target,
                         horizon_r);
}

}  // namespace hdemand
