// Copyright 2026 The Authors.
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

#include "d2dcache/error.h"
#include "d2dcache/mobility.h"
#include "d2dcache/scenario_io.h"
#include "d2dcache/trace_io.h"
#include "test_support.h"

namespace d2dcache {
namespace {

TEST(ScenarioJson, RoundTripsExactly) {
  Rng rng(101);
  for (int rep = 0; rep < 50; ++rep) {
    const Scenario s = testing::RandomScenario(rng, {5, 6, 4, 3, 3, 3.0});
    const std::string text = ScenarioToJson(s);
    const Scenario back = ScenarioFromJson(text);
    EXPECT_EQ(back.rates(), s.rates());
    EXPECT_EQ(back.budgets(), s.budgets());
    EXPECT_EQ(back.deadline_s(), s.deadline_s());
    EXPECT_EQ(back.capacity(), s.capacity());
    EXPECT_EQ(back.library().popularity(), s.library().popularity());
    EXPECT_EQ(back.library().thresholds(), s.library().thresholds());
    EXPECT_EQ(ScenarioToJson(back), text);
  }
}

TEST(ScenarioJson, UsesInfOnlyOnTheDiagonal) {
  const std::string good = R"({"n_users": 2, "deadline_s": 10, "capacity": 1,
      "rates": [["inf", 0.5], [0.5, "inf"]], "budgets": [[1, 1], [1, 1]],
      "files": {"popularity": [1.0], "thresholds": [1]}})";
  const Scenario s = ScenarioFromJson(good);
  EXPECT_TRUE(s.rate(0, 0).infinite);
  EXPECT_EQ(s.rate(0, 1).per_second, 0.5);

  std::string bad = good;
  bad.replace(bad.find("0.5"), 3, "\"inf\"");
  EXPECT_THROW(ScenarioFromJson(bad), ParseError);
  EXPECT_THROW(ScenarioFromJson("{"), ParseError);
  EXPECT_THROW(ScenarioFromJson(R"({"n_users": 2})"), ParseError);

  std::string asymmetric = good;
  asymmetric.replace(asymmetric.rfind("0.5"), 3, "0.7");
  EXPECT_THROW(ScenarioFromJson(asymmetric), ParseError);

  std::string zero_budget = good;
  zero_budget.replace(zero_budget.find("[[1, 1]"), 7, "[[1, 0]");
  EXPECT_THROW(ScenarioFromJson(zero_budget), InvalidArgument);
}

TEST(PlacementJson, RoundTripsWithAndWithoutInfo) {
  Placement p(2, 3);
  p(0, 1) = 2;
  p(1, 2) = 1;
  EXPECT_EQ(PlacementFromJson(PlacementToJson(p)), p);
  const std::string text = PlacementToJson(p, PlacementInfo{"greedy", 0.25});
  EXPECT_NE(text.find("\"strategy\": \"greedy\""), std::string::npos);
  EXPECT_EQ(PlacementFromJson(text), p);
  EXPECT_THROW(PlacementFromJson(R"({"n_users": 1, "n_files": 2,
      "counts": [[1]]})"), ParseError);
  EXPECT_THROW(PlacementFromJson(R"({"n_users": 1, "n_files": 1,
      "counts": [[1.5]]})"), ParseError);
}

TEST(RatesJson, RoundTrips) {
  const RateMatrix r = SampleGammaRates(4, 4.43, 1.0 / 1088.0, 6);
  EXPECT_EQ(RatesFromJson(RatesToJson(r)), r);
}

TEST(TraceCsv, RoundTripsExactly) {
  const RateMatrix rates = SampleGammaRates(5, 2.0, 0.01, 1);
  const ContactTrace t = PoissonContactTrace(rates, 500.0, 2.5, 4);
  const std::string csv = ContactTraceToCsv(t);
  EXPECT_EQ(csv.substr(0, 18), "a,b,start_s,end_s\n");
  const ContactTrace back = ContactTraceFromCsv(csv, 500.0);
  EXPECT_EQ(back.records(), t.records());
  EXPECT_EQ(back.horizon_s(), 500.0);
}

TEST(TraceCsv, HorizonDefaultsToLatestEnd) {
  const ContactTrace t =
      ContactTraceFromCsv("a,b,start_s,end_s\n2,0,1.5,4\n1,2,0,3.25\n");
  EXPECT_EQ(t.horizon_s(), 4.0);
  EXPECT_EQ(t.records()[0], (Contact{1, 2, 0.0, 3.25}));
  EXPECT_EQ(t.records()[1], (Contact{0, 2, 1.5, 4.0}));
}

TEST(TraceCsv, RejectsMalformedInput) {
  EXPECT_THROW(ContactTraceFromCsv("x,y\n0,1,0,1\n"), ParseError);
  EXPECT_THROW(ContactTraceFromCsv("a,b,start_s,end_s\n0,1,0\n"), ParseError);
  EXPECT_THROW(ContactTraceFromCsv("a,b,start_s,end_s\n0,one,0,1\n"), ParseError);
  EXPECT_THROW(ContactTraceFromCsv("a,b,start_s,end_s\n0,1,0,5\n", 4.0),
               ParseError);
}

TEST(Files, ReadWriteAndErrors) {
  const auto path =
      std::filesystem::temp_directory_path() / "d2dcache_io_test.txt";
  WriteFile(path.string(), "hello\n");
  EXPECT_EQ(ReadFile(path.string()), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(ReadFile(path.string()), ParseError);
}

}  // namespace
}  // namespace d2dcache
