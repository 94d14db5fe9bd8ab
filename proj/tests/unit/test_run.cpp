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

#include <filesystem>
#include <fstream>

#include "hdemand/error.hpp"
#include "hdemand/poisson.hpp"
#include "hdemand/run.hpp"

using namespace hdemand;

namespace {

HistoryWindow constant_history() {
  std::vector<DayRecord> recs;
  for (std::int64_t d = 0; d < 30; ++d) recs.push_back({d, 5, 2, 100, 100.0});
  return HistoryWindow(std::move(recs));
}

RunConfig quick(const std::string& model) {
  RunConfig c;
  c.models = parse_model_selection(model);
  c.boot_reps = 100;
  c.threads = 1;
  return c;
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& m : j["models"]) m.erase("elapsed_seconds");
  return j;
}

}  // namespace

TEST(Forecast, PerfectConstantExample) {
  const auto run = run_forecast(quick("perfect"), constant_history(), 100.0);
  const auto& m = run.report["models"][0];
  EXPECT_EQ(m["model"], "perfect");
  EXPECT_EQ(m["acu"]["plugin"], nlohmann::json::array({1, 10}));
  const auto icu = poisson_endpoints(2.0, 0.05);
  EXPECT_EQ(m["icu"]["plugin"], nlohmann::json::array({icu.lower, icu.upper}));
  EXPECT_EQ(run.report["schema"], 1);
  EXPECT_EQ(run.report["seed"], 1);
  EXPECT_EQ(run.report["target_day"], 36);
}

TEST(Forecast, AllModelsStructure) {
  const auto run = run_forecast(quick("all"), constant_history(), 100.0);
  const auto& models = run.report["models"];
  ASSERT_EQ(models.size(), 3u);
  for (const auto& m : models) {
    for (const char* target : {"acu", "icu"}) {
      EXPECT_EQ(m[target]["plugin"].size(), 2u);
      EXPECT_EQ(m[target]["bootstrap"].size(), 2u);
    }
  }
}

TEST(Forecast, ByteIdenticalApartFromTiming) {
  const auto a = run_forecast(quick("all"), constant_history(), 100.0);
  const auto b = run_forecast(quick("all"), constant_history(), 100.0);
  EXPECT_EQ(without_timing(a.report).dump(), without_timing(b.report).dump());
}

TEST(Forecast, ThresholdFlags) {
  auto cfg = quick("perfect");
  cfg.threshold = 9.5;
  const auto run = run_forecast(cfg, constant_history(), 100.0);
  const auto& m = run.report["models"][0];
  EXPECT_EQ(m["acu"]["threshold_exceeded"]["plugin"], true);
  EXPECT_EQ(m["icu"]["threshold_exceeded"]["plugin"], false);
  EXPECT_EQ(run.report["config"]["threshold"], 9.5);
}

TEST(Forecast, RejectsBadInputs) {
  EXPECT_THROW(run_forecast(quick("perfect"), constant_history(), 0.0), InvalidForecast);
  EXPECT_THROW(run_forecast(quick("perfect"), HistoryWindow{}, 10.0), InsufficientHistory);
  EXPECT_THROW(parse_model_selection("optimistic"), Error);
}

TEST(Study, WritesOutputs) {
  StudyConfig cfg;
  cfg.run = quick("perfect");
  cfg.eval_days = 10;
  const auto study = run_synthetic_study(cfg);
  EXPECT_EQ(study.records.size(), 2u * 10u);
  EXPECT_EQ(study.records.front().eval_day, 90);
  const auto dir = std::filesystem::temp_directory_path() / "hdemand_test_study";
  std::filesystem::remove_all(dir);
  write_study_outputs(study, dir);
  for (const char* f : {"coverage.csv", "coverage_matrix.csv", "coverage.json", "traces.csv",
                        "scenario.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::filesystem::remove_all(dir);
}

TEST(Study, RejectsOversizedWindow) {
  StudyConfig cfg;
  cfg.eval_days = 500;
  EXPECT_THROW(run_synthetic_study(cfg), ConfigError);
}
