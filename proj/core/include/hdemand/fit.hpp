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

#include <optional>

#include "hdemand/error.hpp"
#include "hdemand/model.hpp"
#include "hdemand/moments.hpp"

namespace hdemand {

/// Raised when no optimizer start converges within its evaluation budget.
/// Carries the best parameters seen.
class FitFailure : public Error {
 public:
  FitFailure(const std::string& what, ErrorModelParams best)
      : Error(what), best_(best) {}
  const ErrorModelParams& best() const { return best_; }

 private:
  ErrorModelParams best_;
};

// Stationarity margin applied to every fitted rho.
inline constexpr double kRhoMargin = 1e-6;

/// Analytic inverse of the three-moment system. With
/// v = ln M2 - 2 ln M1, u = ln M1 - v/2, w = ln M3 - 2u:
/// rho = w/v - 1, sigma2 = w (1 - rho), mu = u (1 - rho).
/// Throws InfeasibleMoments when v <= 0 or |rho| >= 1.
ErrorModelParams closed_form_solve(const MomentStats& stats);

/// Non-throwing variant; nullopt where closed_form_solve would throw
/// InfeasibleMoments.
std::optional<ErrorModelParams> try_closed_form_solve(const MomentStats& stats);

/// Minimizes (M2 - m2)^2 + (M3 - m3)^2 subject to m1 = 1, with mu
/// eliminated as -sigma2 / (2 (1 + rho)).
ErrorModelParams fit_unbiased(const MomentStats& stats);

/// Minimizes sum_i (Mi - mi)^2 over (mu, sigma2 >= 0, |rho| < 1).
ErrorModelParams fit_biased(const MomentStats& stats);

/// Dispatch on kind; perfect returns the zero triple without fitting.
ErrorModelParams fit_model(ModelKind kind, const MomentStats& stats);

}  // namespace hdemand
