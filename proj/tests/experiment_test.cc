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

#include "d2dcache/experiment.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "d2dcache/greedy.h"
#include "test_support.h"

namespace d2dcache {
namespace {

TEST(Names, ParseRoundTrips) {
  for (Strategy s : {Strategy::kDp, Strategy::kGreedy, Strategy::kPopular,
                     Strategy::kRandom}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  for (SweepAxis a : {SweepAxis::kNUsers, SweepAxis::kCapacity,
                      SweepAxis::kMeanRate, SweepAxis::kGammaR}) {
    EXPECT_EQ(ParseAxis(AxisName(a)), a);
  }
  EXPECT_FALSE(ParseStrategy("optimal"));
  EXPECT_FALSE(ParseAxis("files"));
}

TEST(ApplyAxis, MeanRateKeepsVariance) {
  const ScenarioConfig base;
  const double variance = base.rate_shape * base.rate_scale * base.rate_scale;
  for (double mean : {0.001, 0.004, 0.04}) {
    const ScenarioConfig c = ApplyAxis(base, SweepAxis::kMeanRate, mean);
    EXPECT_NEAR(c.rate_shape * c.rate_scale, mean, 1e-15);
    EXPECT_NEAR(c.rate_shape * c.rate_scale * c.rate_scale, variance, 1e-18);
  }
}

TEST(ApplyAxis, SetsTheNamedField) {
  const ScenarioConfig base;
  EXPECT_EQ(ApplyAxis(base, SweepAxis::kNUsers, 7).n_users, 7);
  EXPECT_EQ(ApplyAxis(base, SweepAxis::kCapacity, 4).capacity, 4);
  EXPECT_EQ(ApplyAxis(base, SweepAxis::kGammaR, 1.5).gamma_r, 1.5);
  EXPECT_THROW(ApplyAxis(base, SweepAxis::kCapacity, 2.5), InvalidArgument);
  EXPECT_THROW(ApplyAxis(base, SweepAxis::kNUsers, 0), InvalidArgument);
  EXPECT_THROW(ApplyAxis(base, SweepAxis::kMeanRate, 0), InvalidArgument);
}

TEST(PlaceWith, DispatchesEachStrategy) {
  const Scenario s = GenerateScenario({.n_files = 6, .seed = 3});
  const double dp = PlaceWith(Strategy::kDp, s, 1).value;
  const double greedy = PlaceWith(Strategy::kGreedy, s, 1).value;
  EXPECT_EQ(greedy, GreedyPlace(s).value);
  EXPECT_GE(dp, greedy - 1e-12);
  EXPECT_GE(dp, PlaceWith(Strategy::kPopular, s, 1).value - 1e-12);
  EXPECT_GE(dp, PlaceWith(Strategy::kRandom, s, 1).value - 1e-12);
}

TEST(RunSweep, SingleCellGivesOneRow) {
  SweepSpec spec;
  spec.axis = SweepAxis::kCapacity;
  spec.values = {2};
  spec.strategies = {Strategy::kGreedy};
  spec.trials = 3;
  const SweepResult r = RunSweep(spec, 1);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.rows[0].runs, 3);
  const std::string csv = SweepCsv(spec, r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "capacity,strategy,mean_ratio,std_error");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(RunSweep, SortedDeterministicAndScheduleIndependent) {
  SweepSpec spec;
  spec.axis = SweepAxis::kGammaR;
  spec.values = {1.0, 0.2, 0.6};
  spec.strategies = {Strategy::kRandom, Strategy::kGreedy, Strategy::kPopular};
  spec.trials = 4;
  spec.base.n_files = 8;
  const SweepResult a = RunSweep(spec, 1);
  const SweepResult b = RunSweep(spec, 3);
  EXPECT_EQ(SweepCsv(spec, a), SweepCsv(spec, b));
  ASSERT_EQ(a.rows.size(), 9u);
  const std::vector<std::string> names{"greedy", "popular", "random"};
  for (size_t k = 0; k < a.rows.size(); ++k) {
    EXPECT_EQ(a.rows[k].axis_value, (std::vector<double>{0.2, 0.6, 1.0})[k / 3]);
    EXPECT_EQ(StrategyName(a.rows[k].strategy), names[k % 3]);
  }
}

TEST(RunSweep, MatchesDirectComputation) {
  SweepSpec spec;
  spec.axis = SweepAxis::kNUsers;
  spec.values = {3};
  spec.strategies = {Strategy::kGreedy};
  spec.trials = 5;
  spec.seed = 42;
  spec.base.n_files = 5;
  const SweepResult r = RunSweep(spec, 2);
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < 5; ++t) {
    ScenarioConfig c = spec.base;
    c.n_users = 3;
    c.seed = DeriveSeed(42, t);
    const double v = GreedyPlace(GenerateScenario(c)).value;
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / 5;
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_NEAR(r.rows[0].mean, mean, 1e-15);
  EXPECT_NEAR(r.rows[0].std_error, std::sqrt((sum_sq - 5 * mean * mean) / 4 / 5),
              1e-12);
}

TEST(RunSweep, FailuresLeavePartialResults) {
  SweepSpec spec;
  spec.axis = SweepAxis::kNUsers;
  spec.values = {3, 10};
  spec.strategies = {Strategy::kDp, Strategy::kGreedy};
  spec.trials = 2;
  spec.base.n_files = 4;
  const SweepResult r = RunSweep(spec, 2);
  EXPECT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.failures.size(), 2u);
  ASSERT_TRUE(r.first_error.has_value());
  EXPECT_EQ(*r.first_error, ErrorCode::kResourceLimit);
}

TEST(RunSweep, RejectsEmptySpec) {
  SweepSpec spec;
  spec.strategies = {Strategy::kGreedy};
  EXPECT_THROW(RunSweep(spec, 1), InvalidArgument);
  spec.values = {1};
  spec.strategies.clear();
  EXPECT_THROW(RunSweep(spec, 1), InvalidArgument);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(3.0), "3");
  EXPECT_EQ(FormatDouble(std::numeric_limits<double>::infinity()), "inf");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(FormatDouble(x)), x);
}

TEST(PopularCacheFraction, BinsUsersByTotalRate) {
  // User totals: 0.03, 0.04, 0.05. The two most popular files are 0 and 1.
  const Scenario s = testing::MakeScenario(3, {0.01, 0.02, 0.03}, 1, 2,
                                           {0.5, 0.3, 0.2}, {1, 1, 1});
  Placement p = Placement::Empty(s);
  p(0, 0) = 1;
  p(0, 1) = 1;
  p(1, 2) = 1;
  p(1, 0) = 1;
  p(2, 2) = 1;
  const std::vector<double> edges{0.0, 0.035, 0.045, 1.0, 2.0};
  const auto bins = PopularCacheFraction(s, p, edges);
  ASSERT_EQ(bins.size(), 4u);
  EXPECT_EQ(bins[0].users, 1);
  EXPECT_DOUBLE_EQ(bins[0].mean_fraction, 1.0);
  EXPECT_EQ(bins[1].users, 1);
  EXPECT_DOUBLE_EQ(bins[1].mean_fraction, 0.5);
  EXPECT_EQ(bins[2].users, 1);
  EXPECT_DOUBLE_EQ(bins[2].mean_fraction, 0.0);
  EXPECT_EQ(bins[3].users, 0);
  EXPECT_EQ(PopularFractionCsv(bins),
            "rate_lo,rate_hi,users,mean_fraction\n0,0.035,1,1\n"
            "0.035,0.045,1,0.5\n0.045,1,1,0\n1,2,0,0\n");
  const std::vector<double> bad{0.0, 0.0};
  EXPECT_THROW(PopularCacheFraction(s, p, bad), InvalidArgument);
}

}  // namespace
}  // namespace d2dcache
