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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "hdemand/ar1.hpp"
#include "hdemand/error.hpp"
#include "hdemand/mixed_poisson.hpp"
#include "hdemand/poisson.hpp"
#include "hdemand/rng.hpp"
#include "hdemand/sampling.hpp"

using namespace hdemand;

namespace {

// pmf summed from zero in long double; slow but obviously right.
long double brute_cdf(std::int64_t k, double lambda) {
  if (k < 0) return 0.0L;
  long double pmf = std::exp(-static_cast<long double>(lambda));
  long double acc = pmf;
  for (std::int64_t i = 1; i <= k; ++i) {
    pmf *= lambda / static_cast<long double>(i);
    acc += pmf;
  }
  return acc;
}

struct GridCase {
  double lambda;
  double delta;
  std::int64_t lower;
  std::int64_t upper;
};

// Endpoints from an arbitrary-precision scan.
const GridCase kGrid[] = {
    {0, .05, 0, 0},      {0, .1, 0, 0},       {0, .2, 0, 0},
    {0.1, .05, 0, 1},    {0.1, .1, 0, 1},     {0.1, .2, 0, 0},
    {0.5, .05, 0, 2},    {0.5, .1, 0, 2},     {0.5, .2, 0, 1},
    {1, .05, 0, 3},      {1, .1, 0, 3},       {1, .2, 0, 2},
    {2, .05, 0, 5},      {2, .1, 0, 5},       {2, .2, 0, 4},
    {5, .05, 1, 10},     {5, .1, 2, 9},       {5, .2, 2, 8},
    {10, .05, 4, 17},    {10, .1, 5, 15},     {10, .2, 6, 14},
    {50, .05, 37, 64},   {50, .1, 39, 62},    {50, .2, 41, 59},
    {100, .05, 81, 120}, {100, .1, 84, 117},  {100, .2, 87, 113},
    {200, .05, 173, 228}, {200, .1, 177, 224}, {200, .2, 182, 218},
};

}  // namespace

TEST(Rng, SameSeedSameStream) {
  RngStream a(9, 3), b(9, 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Rng, StreamsAndSplitsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 64; ++s) {
    firsts.insert(RngStream(1, s)());
    firsts.insert(RngStream(1, 0).split(s)());
    firsts.insert(RngStream(2, s)());
  }
  EXPECT_EQ(firsts.size(), 3u * 64u);
}

TEST(Rng, SeedAndStreamNotInterchangeable) {
  for (std::uint64_t a = 0; a < 20; ++a) {
    for (std::uint64_t b = a + 1; b < 20; ++b) {
      EXPECT_NE(RngStream(a, b)(), RngStream(b, a)());
    }
  }
}

TEST(Rng, SplitIsPure) {
  RngStream parent(4, 0);
  const auto c1 = parent.split(7);
  parent();
  parent();
  auto c2 = parent.split(7);
  auto c1copy = c1;
  EXPECT_EQ(c1copy(), c2());
}

TEST(Rng, UniformInUnitInterval) {
  RngStream r(1, 1);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Poisson, CdfMatchesBruteForce) {
  for (double lambda : {0.1, 1.0, 7.5, 50.0, 200.0}) {
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(3 * lambda + 10); ++k) {
      const double want = static_cast<double>(brute_cdf(k, lambda));
      EXPECT_NEAR(poisson_cdf(k, lambda), want, 1e-12 * std::max(1.0, want))
          << "k=" << k << " lambda=" << lambda;
      EXPECT_NEAR(poisson_sf(k, lambda), static_cast<double>(1.0L - brute_cdf(k, lambda)),
                  1e-12);
    }
  }
  EXPECT_DOUBLE_EQ(poisson_cdf(0, 5.0), 0.006737946999085467);
  EXPECT_EQ(poisson_cdf(-1, 3.0), 0.0);
  EXPECT_EQ(poisson_cdf(0, 0.0), 1.0);
}

TEST(Poisson, TailsStayAccurateFarOut) {
  // Upper tail of lambda=10 at k=40 is ~1e-11; 1 - cdf would lose it.
  const double sf = poisson_sf(40, 10.0);
  const double want = static_cast<double>(1.0L - brute_cdf(40, 10.0));
  EXPECT_GT(sf, 0.0);
  EXPECT_NEAR(sf / want, 1.0, 1e-4);
}

TEST(Poisson, EndpointGrid) {
  for (const auto& c : kGrid) {
    const auto e = poisson_endpoints(c.lambda, c.delta);
    EXPECT_EQ(e.lower, c.lower) << c.lambda << " " << c.delta;
    EXPECT_EQ(e.upper, c.upper) << c.lambda << " " << c.delta;
    EXPECT_EQ(e.delta, c.delta);
  }
}

TEST(Poisson, EndpointDefinitionAgainstBruteForce) {
  for (double lambda = 0.05; lambda < 120.0; lambda *= 1.37) {
    for (double delta : {0.01, 0.05, 0.1, 0.2, 0.5}) {
      const auto e = poisson_endpoints(lambda, delta);
      const long double half = delta / 2.0L;
      EXPECT_LE(brute_cdf(e.lower - 1, lambda), half);
      EXPECT_GT(brute_cdf(e.lower, lambda), half);
      EXPECT_LE(1.0L - brute_cdf(e.upper, lambda), half + 1e-15L);
      if (e.upper > 0) EXPECT_GT(1.0L - brute_cdf(e.upper - 1, lambda), half);
      EXPECT_GE(brute_cdf(e.upper, lambda) - brute_cdf(e.lower - 1, lambda),
                1.0L - delta - 1e-15L);
    }
  }
}

TEST(Poisson, EndpointsMonotoneInLambda) {
  PoissonEndpoints prev{0, 0, 0.05};
  for (double lambda = 0.0; lambda < 300.0; lambda += 0.73) {
    const auto e = poisson_endpoints(lambda, 0.05);
    EXPECT_GE(e.lower, prev.lower);
    EXPECT_GE(e.upper, prev.upper);
    EXPECT_LE(e.lower, e.upper);
    prev = e;
  }
}

TEST(Poisson, LargeLambda) {
  const auto e = poisson_endpoints(1e6, 0.05);
  // Normal approximation: 1e6 -/+ 1.96 * 1000.
  EXPECT_NEAR(static_cast<double>(e.lower), 1e6 - 1960, 5);
  EXPECT_NEAR(static_cast<double>(e.upper), 1e6 + 1960, 5);
}

TEST(Poisson, RejectsBadArguments) {
  EXPECT_THROW(poisson_endpoints(-1.0, 0.05), InvalidArgument);
  EXPECT_THROW(poisson_endpoints(1.0, 0.0), InvalidArgument);
  EXPECT_THROW(poisson_endpoints(1.0, 1.0), InvalidArgument);
  EXPECT_THROW(poisson_endpoints(std::nan(""), 0.05), InvalidArgument);
}

TEST(Sampling, PoissonMeanAndVariance) {
  RngStream r(3, 0);
  const int n = 200000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = static_cast<double>(sample_poisson(12.5, r));
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  EXPECT_NEAR(mean, 12.5, 0.05);
  EXPECT_NEAR(var, 12.5, 0.25);
  EXPECT_EQ(sample_poisson(0.0, r), 0);
}

TEST(Sampling, NormalZeroVarianceIsMean) {
  RngStream r(3, 1);
  EXPECT_EQ(sample_normal(-0.25, 0.0, r), -0.25);
}

TEST(Sampling, MultinomialSplitConservesTotal) {
  RngStream r(3, 2);
  double sa = 0, sb = 0;
  const int reps = 20000;
  for (int i = 0; i < reps; ++i) {
    const auto s = sample_multinomial_split(100, 0.3, 0.1, r);
    ASSERT_EQ(s.a + s.b + s.rest, 100);
    ASSERT_GE(s.a, 0);
    ASSERT_GE(s.b, 0);
    ASSERT_GE(s.rest, 0);
    sa += static_cast<double>(s.a);
    sb += static_cast<double>(s.b);
  }
  EXPECT_NEAR(sa / reps, 30.0, 0.15);
  EXPECT_NEAR(sb / reps, 10.0, 0.1);
  const auto all_a = sample_multinomial_split(17, 1.0, 0.0, r);
  EXPECT_EQ(all_a.a, 17);
  EXPECT_THROW(sample_multinomial_split(5, 0.7, 0.4, r), InvalidArgument);
}

TEST(Ar1, StationaryMoments) {
  const Ar1Params p{0.1, 0.04, 0.6};
  EXPECT_NEAR(p.stationary_mean(), 0.25, 1e-15);
  EXPECT_NEAR(p.stationary_variance(), 0.0625, 1e-15);
  RngStream r(5, 0);
  const auto path = sample_ar1_path(p, 400000, r);
  const double mean = std::accumulate(path.y.begin(), path.y.end(), 0.0) / path.y.size();
  double var = 0, cov = 0;
  for (std::size_t i = 0; i < path.y.size(); ++i) {
    var += (path.y[i] - mean) * (path.y[i] - mean);
    if (i > 0) cov += (path.y[i] - mean) * (path.y[i - 1] - mean);
  }
  var /= path.y.size();
  cov /= path.y.size() - 1;
  EXPECT_NEAR(mean, 0.25, 0.005);
  EXPECT_NEAR(var, 0.0625, 0.002);
  EXPECT_NEAR(cov / var, 0.6, 0.01);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_DOUBLE_EQ(path.gamma[i], std::exp(path.y[i]));
}

TEST(Ar1, ZeroVarianceIsConstant) {
  RngStream r(5, 1);
  const auto path = sample_ar1_path({0.2, 0.0, 0.5}, 50, r);
  for (double y : path.y) EXPECT_EQ(y, 0.4);
}

TEST(Ar1, RejectsNonStationary) {
  EXPECT_THROW(check_ar1_params({0.0, 0.1, 1.0}), InvalidArgument);
  EXPECT_THROW(check_ar1_params({0.0, 0.1, -1.0}), InvalidArgument);
  EXPECT_THROW(check_ar1_params({0.0, -0.1, 0.2}), InvalidArgument);
}

TEST(MixedPoisson, EmpiricalEndpointsIndexing) {
  std::vector<std::int64_t> xs(100);
  std::iota(xs.begin(), xs.end(), 0);
  std::reverse(xs.begin(), xs.end());
  // delta/2 * m = 2.5 -> c = 2: lower x_(2), upper x_(97).
  const auto e = empirical_endpoints(xs, 0.05);
  EXPECT_EQ(e.lower, 2);
  EXPECT_EQ(e.upper, 97);
}

TEST(MixedPoisson, ZeroVarianceApproachesPoisson) {
  RngStream r(8, 0);
  const auto e = mixed_poisson_endpoints({0.0, 0.0, 0.0}, 40.0, 0.05, 200000, r);
  const auto exact = poisson_endpoints(40.0, 0.05);
  EXPECT_LE(std::abs(e.lower - exact.lower), 1);
  EXPECT_LE(std::abs(e.upper - exact.upper), 1);
}

TEST(MixedPoisson, WiderThanPoisson) {
  RngStream r(8, 1);
  const auto e = mixed_poisson_endpoints({0.0, 0.1, 0.5}, 100.0, 0.05, 50000, r);
  const auto exact = poisson_endpoints(100.0, 0.05);
  EXPECT_LT(e.lower, exact.lower);
  EXPECT_GT(e.upper, exact.upper);
}

TEST(MixedPoisson, SameSeedSameEndpoints) {
  RngStream a(8, 2), b(8, 2);
  EXPECT_EQ(mixed_poisson_endpoints({0.0, 0.05, 0.3}, 30.0, 0.1, 300, a),
            mixed_poisson_endpoints({0.0, 0.05, 0.3}, 30.0, 0.1, 300, b));
}
