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

#include "hdemand/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdemand/error.hpp"
#include "hdemand/sampling.hpp"

namespace hdemand {
namespace {

void check_sir(const SirParams& s) {
  if (!(s.beta >= 0.0) || !(s.gamma_rec >= 0.0)) {
    throw InvalidArgument("SIR rates must be non-negative");
  }
  if (!(s.population > 0.0) || !(s.initial_infected > 0.0) ||
      s.initial_infected > s.population) {
    throw InvalidArgument("SIR needs 0 < initial_infected <= population");
  }
  if (s.horizon_days < 1) throw InvalidArgument("SIR horizon must be positive");
  if (!(s.census_scale > 0.0)) throw InvalidArgument("census_scale must be positive");
}

}  // namespace

SirTrajectory sir_trajectory(const SirParams& params) {
  check_sir(params);
  double s = params.population - params.initial_infected;
  double i = params.initial_infected;
  double r = 0.0;
  SirTrajectory out;
  const auto days = static_cast<std::size_t>(params.horizon_days);
  out.susceptible.reserve(days);
  out.infected.reserve(days);
  out.recovered.reserve(days);
  for (std::int64_t day = 0; day < params.horizon_days; ++day) {
    out.susceptible.push_back(s);
    out.infected.push_back(i);
    out.recovered.push_back(r);
    const double infections = params.beta * s * i / params.population;
    const double recoveries = params.gamma_rec * i;
    const double s_next = s - infections;
    const double i_next = i + infections - recoveries;
    if (s_next < 0.0 || i_next < 0.0) {
      throw InvalidArgument("SIR step produced a negative compartment on day " +
                            std::to_string(day) + "; reduce beta or gamma_rec");
    }
    s = s_next;
    i = i_next;
    r += recoveries;
  }
  return out;
}

std::vector<double> sir_lambdas(const SirParams& params) {
  const SirTrajectory t = sir_trajectory(params);
  std::vector<double> out;
  out.reserve(t.infected.size());
  for (double i : t.infected) out.push_back(std::max(params.census_scale * i, kLambdaFloor));
  return out;
}

SirParams calibrate_census_scale(SirParams params, double peak_lambda) {
  if (!(peak_lambda > 0.0)) throw InvalidArgument("peak lambda must be positive");
  params.census_scale = 1.0;
  const auto infected = sir_trajectory(params).infected;
  params.census_scale =
      peak_lambda / *std::max_element(infected.begin(), infected.end());
  return params;
}

SirParams default_sir_params() { return calibrate_census_scale(SirParams{}, 500.0); }

ErrorModelParams default_error_params(ModelKind kind) {
  ErrorModelParams p;
  p.kind = kind;
  if (kind == ModelKind::perfect) return p;
  p.rho = 0.5;
  p.sigma2 = 0.01;
  p.mu = kind == ModelKind::unbiased ? -p.sigma2 / (2.0 * (1.0 + p.rho)) : 0.0;
  return p;
}

SyntheticScenario generate_scenario(ModelKind kind, std::vector<double> lambdas,
                                    double p, double q,
                                    std::optional<Ar1Params> error,
                                    const RngStream& rng) {
  if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0)) {
    throw InvalidArgument("true shares must satisfy p, q >= 0 and p + q <= 1");
  }
  if (lambdas.empty()) throw InvalidArgument("scenario needs at least one day");
  if (kind != ModelKind::perfect) {
    if (!error) throw InvalidArgument("lognormal scenarios need error parameters");
    check_ar1_params(*error);
  }
  for (double& l : lambdas) {
    if (!std::isfinite(l) || l < 0.0) throw InvalidArgument("lambda must be finite and >= 0");
    l = std::max(l, kLambdaFloor);
  }

  const std::size_t n = lambdas.size();
  SyntheticScenario out;
  out.truth.p = p;
  out.truth.q = q;
  out.truth.error.kind = kind;
  out.gammas.assign(n, 1.0);
  if (kind != ModelKind::perfect) {
    out.truth.error.mu = error->mu;
    out.truth.error.sigma2 = error->sigma2;
    out.truth.error.rho = error->rho;
    RngStream path_rng = rng.split(0);
    out.gammas = sample_ar1_path(*error, n, path_rng).gamma;
  }

  RngStream count_rng = rng.split(1);
  RngStream split_rng = rng.split(2);
  std::vector<DayRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    DayRecord& r = records[i];
    r.day = static_cast<std::int64_t>(i);
    r.regional = sample_poisson(lambdas[i], count_rng);
    const MultinomialSplit s = sample_multinomial_split(r.regional, p, q, split_rng);
    r.acu = s.a;
    r.icu = s.b;
    r.forecast = kind == ModelKind::perfect ? lambdas[i] : lambdas[i] / out.gammas[i];
  }
  out.history = HistoryWindow(std::move(records));
  out.lambdas = std::move(lambdas);
  return out;
}

SyntheticScenario generate_scenario(ModelKind kind, const SirParams& sir,
                                    double p, double q,
                                    std::optional<Ar1Params> error,
                                    const RngStream& rng) {
  return generate_scenario(kind, sir_lambdas(sir), p, q, error, rng);
}

}  // namespace hdemand
