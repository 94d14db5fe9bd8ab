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

#include <sstream>

#include "hdemand/error.hpp"
#include "hdemand/io.hpp"

using namespace hdemand;

TEST(ReadHistory, ParsesAndSortsByDay) {
  std::istringstream in(
      "day,acu,icu,regional_census,regional_forecast\n"
      "2,6,1,90,95.5\n"
      "1,5,2,100,100\n"
      "\n"
      "3,4,2,80,81.25\r\n");
  const auto h = read_history_csv(in);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h.first_day(), 1);
  EXPECT_EQ(h[1].acu, 6);
  EXPECT_EQ(h[2].forecast, 81.25);
}

TEST(ReadHistory, ColumnsMatchedByName) {
  std::istringstream in(
      "regional_forecast,day,regional_census,icu,acu,note\n"
      "50.5,0,40,1,3,x\n");
  const auto h = read_history_csv(in);
  EXPECT_EQ(h[0], (DayRecord{0, 3, 1, 40, 50.5}));
}

TEST(ReadHistory, MissingColumn) {
  std::istringstream in("day,acu,icu,regional_census\n0,1,1,5\n");
  try {
    read_history_csv(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "regional_forecast");
  }
}

TEST(ReadHistory, NonIntegerCount) {
  std::istringstream in(
      "day,acu,icu,regional_census,regional_forecast\n"
      "0,1,1,5,5\n"
      "1,1.5,1,5,5\n");
  try {
    read_history_csv(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.field(), "acu");
  }
}

TEST(ReadHistory, RaggedRow) {
  std::istringstream in("day,acu,icu,regional_census,regional_forecast\n0,1,1,5\n");
  EXPECT_THROW(read_history_csv(in), ParseError);
}

TEST(ReadHistory, SharesExceedRegional) {
  std::istringstream in(
      "day,acu,icu,regional_census,regional_forecast\n"
      "0,1,1,5,5\n"
      "1,1,1,5,5\n"
      "2,4,2,5,5\n");
  try {
    read_history_csv(in);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.row(), 3u);
    EXPECT_NE(std::string(e.what()).find("A+B exceeds N at row 3"), std::string::npos);
  }
}

TEST(ReadHistory, GapInDays) {
  std::istringstream in(
      "day,acu,icu,regional_census,regional_forecast\n0,1,1,5,5\n2,1,1,5,5\n");
  EXPECT_THROW(read_history_csv(in), ValidationError);
}

TEST(ReadHistory, NonPositiveForecast) {
  std::istringstream in("day,acu,icu,regional_census,regional_forecast\n0,1,1,5,0\n");
  EXPECT_THROW(read_history_csv(in), ValidationError);
}

TEST(ReadHistory, EmptyInput) {
  std::istringstream in("");
  EXPECT_THROW(read_history_csv(in), ParseError);
}

TEST(WriteHistory, RoundTripsExactly) {
  const HistoryWindow h({{0, 3, 1, 40, 0.1}, {1, 2, 0, 35, 1.0 / 3.0}, {2, 5, 2, 61, 1e-6}});
  std::stringstream buf;
  write_history_csv(h, buf);
  EXPECT_EQ(read_history_csv(buf), h);
}

TEST(ReadForecasts, Table) {
  std::istringstream in("day,regional_forecast\n10,120.5\n11,130\n");
  const auto f = read_forecasts_csv(in);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.at(11), 130.0);
}

TEST(ReadForecasts, Invalid) {
  std::istringstream dup("day,regional_forecast\n10,1\n10,2\n");
  EXPECT_THROW(read_forecasts_csv(dup), ValidationError);
  std::istringstream neg("day,regional_forecast\n10,-1\n");
  EXPECT_THROW(read_forecasts_csv(neg), ValidationError);
  std::istringstream junk("day,regional_forecast\n10,abc\n");
  EXPECT_THROW(read_forecasts_csv(junk), ParseError);
}

TEST(Ingest, MissingFile) {
  EXPECT_THROW(ingest_history("/nonexistent/history.csv"), ParseError);
}
