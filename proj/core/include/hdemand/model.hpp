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

#include <array>
#include <string>
#include <string_view>

#include "hdemand/ar1.hpp"

namespace hdemand {

/// Forecast-error regime.
///   perfect:  the regional forecast equals the Poisson mean.
///   unbiased: lognormal AR(1) error with E[N/F] = 1.
///   biased:   lognormal AR(1) error, mean unrestricted.
enum class ModelKind { perfect = 0, unbiased = 1, biased = 2 };

inline constexpr std::array<ModelKind, 3> kAllModels = {
    ModelKind::perfect, ModelKind::unbiased, ModelKind::biased};

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Fitted forecast-error parameters. For perfect forecasts the triple is
/// identically zero.
struct ErrorModelParams {
  double mu = 0.0;
  double sigma2 = 0.0;
  double rho = 0.0;
  ModelKind kind = ModelKind::perfect;
  double objective_value = 0.0;

  Ar1Params ar1() const { return {mu, sigma2, rho}; }

  static ErrorModelParams perfect() { return {}; }
};

}  // namespace hdemand
