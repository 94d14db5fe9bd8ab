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

#include "hdemand/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hdemand/simplex.hpp"

namespace hdemand {

namespace {

constexpr double kRhoMax = 1.0 - kRhoMargin;
constexpr double kDefaultSigma2 = 1e-4;
// Below this sigma2 the moments are flat to double precision; clamping here
// lets the simplex collapse instead of marching log(sigma2) towards -inf.
constexpr double kMinLogSigma2 = -32.0;
// Objective at which a start is taken as an exact solve and the remaining
// perturbed starts are skipped.
constexpr double kExactObjective = 1e-24;

double to_sigma2(double t) { return std::exp(std::max(t, kMinLogSigma2)); }

double to_rho(double v) { return std::clamp(std::tanh(v), -kRhoMax, kRhoMax); }

double from_rho(double rho) { return std::atanh(std::clamp(rho, -kRhoMax, kRhoMax)); }

void check_stats(const MomentStats& stats) {
  if (stats.n < 2) {
    throw InsufficientHistory("moment fit needs statistics from n >= 2 days");
  }
  if (!std::isfinite(stats.m1_hat) || !std::isfinite(stats.m2_hat) ||
      !std::isfinite(stats.m3_hat)) {
    throw InvalidArgument("moment statistics must be finite");
  }
}

double sq(double x) { return x * x; }

constexpr double kAgreementTol = 1e-8;

bool confirmed(double f, double best_f) {
  return std::abs(f - best_f) <= kAgreementTol * std::abs(best_f);
}

struct Candidate {
  NelderMeadResult result;
  bool valid = false;
};

// Runs the starts in order (stopping early on an exact solve or once two
// starts agree) and keeps the best
// converged result, or the best overall if none converged.
template <typename Objective>
Candidate multi_start(const Objective& objective,
                      const std::vector<std::vector<double>>& starts,
                      const std::vector<double>& steps) {
  Candidate best_converged, best_any;
  for (const auto& start : starts) {
    NelderMeadResult r = nelder_mead(objective, start, steps);
    if (r.converged) {
      // Restart from the optimum to guard against a collapsed simplex.
      NelderMeadResult again = nelder_mead(objective, r.x, steps);
      again.evaluations += r.evaluations;
      if (again.converged && again.f <= r.f) r = again;
    }
    const bool agrees = r.converged && best_converged.valid &&
                        confirmed(r.f, best_converged.result.f);
    if (!best_any.valid || r.f < best_any.result.f) best_any = {r, true};
    if (r.converged && (!best_converged.valid || r.f < best_converged.result.f)) {
      best_converged = {r, true};
    }
    if (best_converged.valid && best_converged.result.f <= kExactObjective) break;
    // Two independent starts landing on the same minimum value is taken as
    // confirmation; the ridge at sigma2 -> 0 makes every extra start costly.
    if (agrees) break;
  }
  return best_converged.valid ? best_converged : best_any;
}

ErrorModelParams unbiased_params(const std::vector<double>& x) {
  ErrorModelParams p;
  p.sigma2 = to_sigma2(x[0]);
  p.rho = to_rho(x[1]);
  p.mu = -p.sigma2 / (2.0 * (1.0 + p.rho));
  p.kind = ModelKind::unbiased;
  return p;
}

ErrorModelParams biased_params(const std::vector<double>& x) {
  ErrorModelParams p;
  // x[0] is the stationary mean mu / (1 - rho); near sigma2 = 0 the moments
  // depend on it alone, so the simplex is not left crawling along a ridge.
  p.sigma2 = to_sigma2(x[1]);
  p.rho = to_rho(x[2]);
  p.mu = x[0] * (1.0 - p.rho);
  p.kind = ModelKind::biased;
  return p;
}

}  // namespace

std::optional<ErrorModelParams> try_closed_form_solve(const MomentStats& stats) {
  if (!(stats.m1_hat > 0.0 && stats.m2_hat > 0.0 && stats.m3_hat > 0.0)) {
    throw InvalidArgument("closed-form solve needs positive moment statistics");
  }
  const double l1 = std::log(stats.m1_hat);
  const double v = std::log(stats.m2_hat) - 2.0 * l1;
  if (!(v > 0.0)) return std::nullopt;
  const double u = l1 - v / 2.0;
  const double w = std::log(stats.m3_hat) - 2.0 * u;
  const double rho = w / v - 1.0;
  if (!(std::abs(rho) < 1.0)) return std::nullopt;

  ErrorModelParams p;
  p.rho = rho;
  p.sigma2 = w * (1.0 - rho);
  p.mu = u * (1.0 - rho);
  p.kind = ModelKind::biased;
  const MomentValues m = moment_fns(p.mu, p.sigma2, p.rho);
  p.objective_value = sq(stats.m1_hat - m.m1) + sq(stats.m2_hat - m.m2) +
                      sq(stats.m3_hat - m.m3);
  return p;
}

ErrorModelParams closed_form_solve(const MomentStats& stats) {
  auto p = try_closed_form_solve(stats);
  if (!p) {
    throw InfeasibleMoments(
        "moment statistics admit no stationary lognormal AR(1) solution");
  }
  return *p;
}

ErrorModelParams fit_unbiased(const MomentStats& stats) {
  check_stats(stats);
  const double m2_hat = stats.m2_hat;
  const double m3_hat = stats.m3_hat;
  auto objective = [m2_hat, m3_hat](const std::vector<double>& x) {
    const ErrorModelParams p = unbiased_params(x);
    const MomentValues m = moment_fns(p.mu, p.sigma2, p.rho);
    return sq(m2_hat - m.m2) + sq(m3_hat - m.m3);
  };

  // Under the constraint m2 = exp(s), m3 = exp(s rho) with
  // s = sigma2 / (1 - rho^2), which inverts directly when M2 > 1.
  double sigma2 = kDefaultSigma2;
  double rho = 0.0;
  if (m2_hat > 1.0 && m3_hat > 0.0) {
    const double s = std::log(m2_hat);
    const double ratio = std::log(m3_hat) / s;
    rho = std::abs(ratio) < kRhoMax ? ratio : std::clamp(ratio, -0.99, 0.99);
    sigma2 = s * (1.0 - rho * rho);
  }
  const std::vector<double> x0 = {std::log(sigma2), from_rho(rho)};
  std::vector<std::vector<double>> starts = {x0};
  for (const auto& d : std::array<std::array<double, 2>, 4>{
           {{1.0, 0.5}, {1.0, -0.5}, {-1.0, 0.5}, {-1.0, -0.5}}}) {
    starts.push_back({x0[0] + d[0], x0[1] + d[1]});
  }

  const Candidate best = multi_start(objective, starts, {0.5, 0.2});
  ErrorModelParams fitted = unbiased_params(best.result.x);
  fitted.objective_value = best.result.f;
  if (!best.result.converged) {
    throw FitFailure("unbiased moment fit did not converge", fitted);
  }
  return fitted;
}

ErrorModelParams fit_biased(const MomentStats& stats) {
  check_stats(stats);
  const MomentStats s = stats;
  auto objective = [s](const std::vector<double>& x) {
    const ErrorModelParams p = biased_params(x);
    const MomentValues m = moment_fns(p.mu, p.sigma2, p.rho);
    return sq(s.m1_hat - m.m1) + sq(s.m2_hat - m.m2) + sq(s.m3_hat - m.m3);
  };

  double mu = 0.0, sigma2 = kDefaultSigma2, rho = 0.0;
  // All-zero counts leave the closed form undefined; the default start
  // still reaches the boundary minimum.
  if (stats.m1_hat > 0.0 && stats.m2_hat > 0.0 && stats.m3_hat > 0.0) {
    if (auto cf = try_closed_form_solve(stats);
        cf && std::abs(cf->rho) < kRhoMax && cf->sigma2 > 0.0) {
      mu = cf->mu;
      sigma2 = cf->sigma2;
      rho = cf->rho;
    }
  }
  const std::vector<double> x0 = {mu / (1.0 - rho), std::log(sigma2), from_rho(rho)};
  std::vector<std::vector<double>> starts = {x0};
  for (const auto& d : std::array<std::array<double, 3>, 4>{{{0.05, 1.0, 0.5},
                                                            {-0.05, 1.0, -0.5},
                                                            {0.05, -1.0, -0.5},
                                                            {-0.05, -1.0, 0.5}}}) {
    starts.push_back({x0[0] + d[0], x0[1] + d[1], x0[2] + d[2]});
  }

  const Candidate best = multi_start(objective, starts, {0.01, 0.5, 0.2});
  ErrorModelParams fitted = biased_params(best.result.x);
  fitted.objective_value = best.result.f;
  if (!best.result.converged) {
    throw FitFailure("biased moment fit did not converge", fitted);
  }
  return fitted;
}

ErrorModelParams fit_model(ModelKind kind, const MomentStats& stats) {
  switch (kind) {
    case ModelKind::perfect:
      return ErrorModelParams::perfect();
    case ModelKind::unbiased:
      return fit_unbiased(stats);
    case ModelKind::biased:
      return fit_biased(stats);
  }
  throw InvalidArgument("unknown model kind");
}

}  // namespace hdemand
