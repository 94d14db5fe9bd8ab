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
#include <functional>
#include <vector>

namespace hdemand {

struct NelderMeadOptions {
  std::int64_t max_evaluations = 10'000;
  // Stop once (f_worst - f_best) <= f_rel_tol * |f_best| ...
  double f_rel_tol = 1e-12;
  // ... or the simplex diameter (max-norm) drops below x_tol.
  double x_tol = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Unconstrained Nelder-Mead minimization. Non-finite objective values are
/// treated as +infinity. `steps` gives the initial simplex edge per axis.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& steps,
    const NelderMeadOptions& options = {});

}  // namespace hdemand
