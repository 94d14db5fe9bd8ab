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
#include <optional>
#include <vector>

#include "hdemand/ar1.hpp"
#include "hdemand/history.hpp"
#include "hdemand/model.hpp"
#include "hdemand/rng.hpp"

namespace hdemand {

// Smallest expected census a synthetic day may have.
inline constexpr double kLambdaFloor = 1e-6;

/// Deterministic discrete-day SIR driving the expected regional census.
struct SirParams {
  double beta = 0.25;        // transmission rate per day
  double gamma_rec = 0.1;    // recovery rate per day
  double population = 1e6;
  double initial_infected = 100.0;
  std::int64_t horizon_days = 100;
  double census_scale = 1.0;  // lambda_i = census_scale * I_i
};

/// Default epidemic with census_scale chosen so the peak lambda is 500.
SirParams default_sir_params();

/// Sets census_scale so that max_i lambda_i == peak_lambda.
SirParams calibrate_census_scale(SirParams params, double peak_lambda);

struct SirTrajectory {
  std::vector<double> susceptible;
  std::vector<double> infected;
  std::vector<double> recovered;
};

/// Compartments on days [0, horizon) under daily Euler steps.
SirTrajectory sir_trajectory(const SirParams& params);

/// Euler steps S -= b S I / pop, I += b S I / pop - g I, R += g I.
/// lambda_i = max(census_scale * I_i, kLambdaFloor) for i in [0, horizon).
/// Throws InvalidArgument if a step would drive a compartment negative.
std::vector<double> sir_lambdas(const SirParams& params);

struct ScenarioTruth {
  double p = 0.0;
  double q = 0.0;
  ErrorModelParams error;
};

struct SyntheticScenario {
  std::vector<double> lambdas;
  std::vector<double> gammas;  // exp(Y_i); all ones for perfect forecasts
  HistoryWindow history;       // days numbered from 0
  ScenarioTruth truth;
};

/// Default error parameters for a regime: rho = 0.5, sigma2 = 0.01 and
/// mu = -sigma2 / (2 (1 + rho)) (unbiased) or mu = 0 (biased).
ErrorModelParams default_error_params(ModelKind kind);

/// N_i ~ Poisson(lambda_i); (A_i, B_i) a multinomial split of N_i with
/// (p, q); F_i = lambda_i for perfect forecasts, otherwise
/// F_i = lambda_i / exp(Y_i) along a stationary AR(1) path Y.
/// Lambdas below kLambdaFloor are raised to it.
SyntheticScenario generate_scenario(ModelKind kind, std::vector<double> lambdas,
                                    double p, double q,
                                    std::optional<Ar1Params> error,
                                    const RngStream& rng);

SyntheticScenario generate_scenario(ModelKind kind, const SirParams& sir,
                                    double p, double q,
                                    std::optional<Ar1Params> error,
                                    const RngStream& rng);

}  // namespace hdemand
