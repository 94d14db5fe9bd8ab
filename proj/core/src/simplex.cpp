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

#include "hdemand/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hdemand/error.hpp"

namespace hdemand {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& steps,
    const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0 || steps.size() != dim) {
    throw InvalidArgument("simplex start and step vectors must match");
  }

  std::int64_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    const double f = objective(x);
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> pts(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += steps[i];
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fx[i] = eval(pts[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  bool converged = false;

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[dim - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
      }
    }
    const double spread = fx[worst] - fx[best];
    if ((std::isfinite(spread) &&
         spread <= options.f_rel_tol * std::abs(fx[best])) ||
        diameter <= options.x_tol) {
      converged = true;
      break;
    }
    if (evaluations >= options.max_evaluations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    for (std::size_t k = 0; k < dim; ++k) {
      trial[k] = centroid[k] + kReflect * (centroid[k] - pts[worst][k]);
    }
    const double f_reflect = eval(trial);

    if (f_reflect < fx[best]) {
      for (std::size_t k = 0; k < dim; ++k) {
        trial2[k] = centroid[k] + kExpand * (trial[k] - centroid[k]);
      }
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        pts[worst] = trial2;
        fx[worst] = f_expand;
      } else {
        pts[worst] = trial;
        fx[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < fx[second_worst]) {
      pts[worst] = trial;
      fx[worst] = f_reflect;
      continue;
    }

    // Contract toward the better of the reflected and worst points.
    const bool outside = f_reflect < fx[worst];
    const std::vector<double>& anchor = outside ? trial : pts[worst];
    for (std::size_t k = 0; k < dim; ++k) {
      trial2[k] = centroid[k] + kContract * (anchor[k] - centroid[k]);
    }
    const double f_contract = eval(trial2);
    if (f_contract < std::min(f_reflect, fx[worst])) {
      pts[worst] = trial2;
      fx[worst] = f_contract;
      continue;
    }

    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        pts[i][k] = pts[best][k] + kShrink * (pts[i][k] - pts[best][k]);
      }
      fx[i] = eval(pts[i]);
    }
  }

  const auto best_it = std::min_element(fx.begin(), fx.end());
  const auto best = static_cast<std::size_t>(best_it - fx.begin());
  return {pts[best], fx[best], evaluations, converged};
}

}  // namespace hdemand
