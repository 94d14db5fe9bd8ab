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

#include <random>
#include <set>
#include <sstream>

#include "hdemand/error.hpp"
#include "hdemand/evaluation.hpp"
#include "hdemand/fit.hpp"
#include "hdemand/moments.hpp"
#include "hdemand/poisson.hpp"
#include "hdemand/synthetic.hpp"

using namespace hdemand;

namespace {

HistoryWindow constant_series(std::int64_t n) {
  std::vector<DayRecord> recs;
  for (std::int64_t d = 0; d < n; ++d) recs.push_back({d, 5, 2, 100, 100.0});
  return HistoryWindow(std::move(recs));
}

BacktestConfig fast_config() {
  BacktestConfig c;
  c.replicates = 50;
  c.threads = 1;
  return c;
}

BacktestRecord record(ModelKind m, Target t, std::int64_t pl, std::int64_t pu,
                      std::int64_t bl, std::int64_t bu, std::int64_t actual) {
  BacktestRecord r;
  r.model = m;
  r.target = t;
  r.plugin = {pl, pu, 0.95, IntervalKind::plugin, t, 7};
  r.bootstrap = {bl, bu, 0.95, IntervalKind::bootstrap, t, 7};
  r.actual = actual;
  return r;
}

}  // namespace

TEST(Backtest, ConstantSeriesGivesFixedPluginIntervals) {
  const auto recs = rolling_backtest(constant_series(40), 10, 7, 1, {ModelKind::perfect},
                                     fast_config());
  const auto a = poisson_endpoints(5.0, 0.05);
  const auto b = poisson_endpoints(2.0, 0.05);
  ASSERT_EQ(recs.size(), 2u * 30u);
  for (const auto& r : recs) {
    const auto& want = r.target == Target::acu ? a : b;
    EXPECT_EQ(r.plugin.lower, want.lower);
    EXPECT_EQ(r.plugin.upper, want.upper);
    EXPECT_FALSE(r.degraded);
  }
}

TEST(Backtest, StrideSevenOnSeventyDays) {
  const auto recs = rolling_backtest(constant_series(70), 10, 7, 7, {ModelKind::perfect},
                                     fast_config());
  std::set<std::int64_t> days;
  for (const auto& r : recs) days.insert(r.eval_day);
  EXPECT_EQ(days.size(), 9u);
  EXPECT_EQ(*days.begin(), 10);
}

TEST(Backtest, WindowGrowsByStride) {
  const auto recs = rolling_backtest(constant_series(50), 12, 7, 3, {ModelKind::perfect},
                                     fast_config());
  std::int64_t prev = -1;
  for (const auto& r : recs) {
    if (r.target != Target::acu) continue;
    EXPECT_EQ(r.n_used, r.eval_day - 7 + 1);
    if (prev >= 0) EXPECT_EQ(r.n_used, prev + 3);
    prev = r.n_used;
  }
}

TEST(Backtest, NoLookAhead) {
  // A spike placed at or after the cutoff t - r + 1 must not move the
  // prediction for day t.
  const auto sc = generate_scenario(ModelKind::unbiased, std::vector<double>(40, 200.0), 0.05,
                                    0.02, default_error_params(ModelKind::unbiased).ar1(),
                                    RngStream(5, 3));
  std::vector<DayRecord> spiked(sc.history.records().begin(), sc.history.records().end());
  const std::int64_t t = 30, r = 7;
  for (std::int64_t d = t - r + 1; d < 40; ++d) {
    if (d == t) continue;
    spiked[static_cast<std::size_t>(d)].regional = 100000;
    spiked[static_cast<std::size_t>(d)].acu = 50000;
    spiked[static_cast<std::size_t>(d)].forecast = 3.0;
  }
  const HistoryWindow spiked_series(spiked);
  const std::vector<ModelKind> models = {ModelKind::perfect, ModelKind::unbiased,
                                         ModelKind::biased};
  const auto clean = rolling_backtest(sc.history, t, r, 100, models, fast_config());
  const auto dirty = rolling_backtest(spiked_series, t, r, 100, models, fast_config());
  ASSERT_EQ(clean.size(), dirty.size());
  for (std::size_t i = 0; i < clean.size(); ++i) {
    EXPECT_EQ(clean[i].plugin.lower, dirty[i].plugin.lower);
    EXPECT_EQ(clean[i].plugin.upper, dirty[i].plugin.upper);
    EXPECT_EQ(clean[i].bootstrap.lower, dirty[i].bootstrap.lower);
    EXPECT_EQ(clean[i].bootstrap.upper, dirty[i].bootstrap.upper);
  }
}

TEST(Backtest, RejectsBadConfig) {
  const auto s = constant_series(20);
  EXPECT_THROW(rolling_backtest(s, 7, 7, 1, {ModelKind::perfect}, fast_config()), ConfigError);
  EXPECT_THROW(rolling_backtest(s, 10, 7, 0, {ModelKind::perfect}, fast_config()), ConfigError);
  EXPECT_THROW(rolling_backtest(s, 25, 7, 1, {ModelKind::perfect}, fast_config()), ConfigError);
  EXPECT_THROW(rolling_backtest(s, 10, 7, 1, {}, fast_config()), ConfigError);
}

TEST(Backtest, Deterministic) {
  const auto sc = generate_scenario(ModelKind::biased, std::vector<double>(30, 150.0), 0.05,
                                    0.02, default_error_params(ModelKind::biased).ar1(),
                                    RngStream(8, 3));
  auto c1 = fast_config();
  auto c2 = fast_config();
  c2.threads = 3;
  const auto a = rolling_backtest(sc.history, 20, 7, 2, {ModelKind::biased}, c1);
  const auto b = rolling_backtest(sc.history, 20, 7, 2, {ModelKind::biased}, c2);
  std::ostringstream sa, sb;
  write_traces_csv(a, sa);
  write_traces_csv(b, sb);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Coverage, AllCovered) {
  std::vector<BacktestRecord> recs;
  for (int i = 0; i < 5; ++i) recs.push_back(record(ModelKind::perfect, Target::acu, 0, 10, 0, 12, 5));
  const auto t = coverage_table(recs);
  EXPECT_EQ(t.at(ModelKind::perfect, Target::acu, IntervalKind::plugin).coverage(), 1.0);
  EXPECT_EQ(t.at(ModelKind::perfect, Target::acu, IntervalKind::bootstrap).coverage(), 1.0);
}

TEST(Coverage, SevenOfTen) {
  std::vector<BacktestRecord> recs;
  for (int i = 0; i < 10; ++i) {
    recs.push_back(record(ModelKind::unbiased, Target::icu, 2, 8, 1, 9, i < 7 ? 5 : 20));
  }
  const auto& cell = coverage_table(recs).at(ModelKind::unbiased, Target::icu, IntervalKind::plugin);
  EXPECT_EQ(cell.covered, 7);
  EXPECT_EQ(cell.count, 10);
  EXPECT_EQ(cell.coverage(), 0.7);
  EXPECT_EQ(cell.mean_width(), 6.0);
}

TEST(Coverage, ContainmentImpliesNoLowerCoverage) {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<std::int64_t> u(0, 30);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BacktestRecord> recs;
    for (int i = 0; i < 40; ++i) {
      const std::int64_t lo = u(gen), hi = lo + u(gen);
      const std::int64_t blo = std::max<std::int64_t>(lo - u(gen) / 10, 0);
      const std::int64_t bhi = hi + u(gen) / 10;
      recs.push_back(record(ModelKind::biased, Target::acu, lo, hi, blo, bhi, u(gen) + 5));
    }
    const auto t = coverage_table(recs);
    EXPECT_GE(t.at(ModelKind::biased, Target::acu, IntervalKind::bootstrap).covered,
              t.at(ModelKind::biased, Target::acu, IntervalKind::plugin).covered);
  }
}

TEST(Coverage, UnknownCellThrows) {
  const auto t = coverage_table({record(ModelKind::perfect, Target::acu, 0, 1, 0, 1, 0)});
  EXPECT_THROW(t.at(ModelKind::biased, Target::acu, IntervalKind::plugin), InvalidArgument);
}

TEST(Coverage, CsvAndJsonShape) {
  std::vector<BacktestRecord> recs = {record(ModelKind::perfect, Target::acu, 1, 10, 0, 11, 4),
                                      record(ModelKind::perfect, Target::icu, 0, 5, 0, 6, 9)};
  const auto t = coverage_table(recs);
  std::ostringstream csv, matrix, traces;
  write_coverage_csv(t, csv);
  write_coverage_matrix_csv(t, matrix);
  write_traces_csv(recs, traces);
  EXPECT_EQ(csv.str(),
            "model,target,interval,covered,count,coverage,mean_width\n"
            "perfect,acu,plugin,1,1,1.000000,9.000000\n"
            "perfect,acu,bootstrap,1,1,1.000000,11.000000\n"
            "perfect,icu,plugin,0,1,0.000000,5.000000\n"
            "perfect,icu,bootstrap,0,1,0.000000,6.000000\n");
  EXPECT_EQ(matrix.str(),
            "model,plugin_acu,bootstrap_acu,plugin_icu,bootstrap_icu\n"
            "perfect,1.000000,1.000000,0.000000,0.000000\n");
  EXPECT_EQ(traces.str().substr(0, traces.str().find('\n')),
            "day,model,target,kind,lower,upper,actual");
  const auto j = coverage_json(t);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["coverage"].size(), 4u);
}

TEST(Consistency, SuitePasses) {
  const auto rep = consistency_suite();
  EXPECT_TRUE(rep.all_passed());
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.passed) << c.name << " = " << c.statistic << " not in [" << c.lower << ", "
                          << c.upper << "]";
  }
}
