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

#include "d2dcache/greedy.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "d2dcache/baselines.h"
#include "d2dcache/error.h"
#include "d2dcache/exact_dp.h"
#include "d2dcache/objective.h"
#include "test_support.h"

namespace d2dcache {
namespace {

using testing::MakeScenario;

double FiniteDifference(const Scenario& s, Placement p, int j, int f) {
  const double before = OffloadingRatio(s, p);
  ++p(j, f);
  return OffloadingRatio(s, p) - before;
}

TEST(MarginalGain, EmptyPlacementTwoUsers) {
  const Scenario s = MakeScenario(2, {1.0}, 1, 1, {1.0}, {1});
  const GreedyState st(s);
  const double expected = 0.5 * (1.0 + (1.0 - std::exp(-1.0)));
  EXPECT_NEAR(MarginalGain(s, st, 0, 0), expected, 1e-15);
  EXPECT_NEAR(MarginalGain(s, st, 0, 0),
              FiniteDifference(s, Placement::Empty(s), 0, 0), 1e-12);
  EXPECT_NEAR(expected, 0.8161, 1e-4);
}

// The adding user already reaches the other user's copy almost surely, so
// only the e^{-lambda T} chance of missing it is recovered.
TEST(MarginalGain, HeldFileGainVanishesWithCertainContact) {
  const Scenario s = MakeScenario(2, {30.0}, 1, 1, {1.0}, {1});
  Placement held = Placement::Empty(s);
  held(1, 0) = 1;
  const GreedyState st(s, held);
  const double gain = MarginalGain(s, st, 0, 0);
  EXPECT_NEAR(gain, 0.5 * std::exp(-30.0), 1e-20);
  EXPECT_NEAR(gain, FiniteDifference(s, held, 0, 0), 1e-12);
}

TEST(MarginalGain, HeldFileWithoutContactKeepsSelfBenefit) {
  const Scenario s = MakeScenario(2, {0.0}, 1, 1, {1.0}, {1});
  Placement held = Placement::Empty(s);
  held(1, 0) = 1;
  const GreedyState st(s, held);
  EXPECT_NEAR(MarginalGain(s, st, 0, 0), 0.5, 1e-15);
  EXPECT_NEAR(MarginalGain(s, st, 0, 0), FiniteDifference(s, held, 0, 0), 1e-12);
}

TEST(MarginalGain, RejectsIneligibleElements) {
  const Scenario s = MakeScenario(2, {1.0}, 1, 1, {0.5, 0.5}, {1, 1});
  Placement p = Placement::Empty(s);
  p(0, 0) = 1;
  const GreedyState st(s, p);
  EXPECT_THROW(MarginalGain(s, st, 0, 1), InvalidArgument);
  EXPECT_THROW(MarginalGain(s, st, 2, 0), InvalidArgument);
  const Scenario other = MakeScenario(2, {1.0}, 1, 2, {0.5, 0.5}, {1, 1});
  Placement q = Placement::Empty(other);
  q(1, 0) = 1;
  const GreedyState st2(other, q);
  EXPECT_THROW(MarginalGain(other, st2, 1, 0), InvalidArgument);
  EXPECT_THROW(MarginalGain(s, st2, 0, 0), InvalidArgument);
  p(0, 1) = 1;
  EXPECT_THROW(GreedyState(s, p), ConstraintViolation);
}

TEST(MarginalGain, EqualsFiniteDifferenceOnFuzzedStates) {
  Rng rng(53);
  int checked = 0;
  while (checked < 400) {
    const Scenario s = testing::RandomScenario(rng, {4, 3, 4, 3, 3, 3.0});
    const Placement p = testing::RandomPlacement(s, rng);
    const GreedyState st(s, p);
    const int j = static_cast<int>(rng() % s.n_users());
    const int f = static_cast<int>(rng() % s.n_files());
    if (!st.CanAdd(j, f)) continue;
    ASSERT_NEAR(MarginalGain(s, st, j, f), FiniteDifference(s, p, j, f), 1e-9);
    ++checked;
  }
}

TEST(MarginalGain, DiminishesOnNestedStates) {
  Rng rng(59);
  int checked = 0;
  while (checked < 400) {
    const Scenario s = testing::RandomScenario(rng, {4, 3, 4, 3, 3, 3.0});
    const Placement big = testing::RandomPlacement(s, rng);
    Placement small = big;
    for (int j = 0; j < s.n_users(); ++j) {
      for (int f = 0; f < s.n_files(); ++f) {
        small(j, f) = static_cast<int>(rng() % (big(j, f) + 1));
      }
    }
    const GreedyState a(s, small);
    const GreedyState d(s, big);
    const int j = static_cast<int>(rng() % s.n_users());
    const int f = static_cast<int>(rng() % s.n_files());
    if (!d.CanAdd(j, f)) continue;
    ASSERT_TRUE(a.CanAdd(j, f));
    const double ga = MarginalGain(s, a, j, f);
    const double gd = MarginalGain(s, d, j, f);
    ASSERT_GE(ga, gd - 1e-12);
    ASSERT_GE(gd, -1e-12);
    ++checked;
  }
}

TEST(GreedyPlace, SingleUserTakesTopFiles) {
  const Scenario s = MakeScenario(1, {}, 1, 2, {0.5, 0.3, 0.2}, {1, 1, 1});
  const GreedyResult r = GreedyPlace(s);
  EXPECT_EQ(r.placement(0, 0), 1);
  EXPECT_EQ(r.placement(0, 1), 1);
  EXPECT_EQ(r.placement(0, 2), 0);
  EXPECT_NEAR(r.value, 0.8, 1e-15);
}

TEST(GreedyPlace, Deterministic) {
  const Scenario s = GenerateScenario({.seed = 3});
  const GreedyResult a = GreedyPlace(s);
  const GreedyResult b = GreedyPlace(s);
  EXPECT_EQ(a.placement, b.placement);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(GreedyTraceCsv(a.trace), GreedyTraceCsv(b.trace));
}

TEST(GreedyPlace, TiesGoToSmallestFileThenUser) {
  // Symmetric users and files: every first gain ties.
  const Scenario s = MakeScenario(2, {0.0}, 1, 1, {0.5, 0.5}, {1, 1});
  const GreedyResult r = GreedyPlace(s);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace[0].file, 0);
  EXPECT_EQ(r.trace[0].user, 0);
}

TEST(GreedyPlace, MatchesNaiveRecomputingGreedy) {
  Rng rng(61);
  for (int rep = 0; rep < 200; ++rep) {
    const Scenario s = testing::RandomScenario(rng, {4, 5, 4, 3, 3, 3.0});
    ASSERT_EQ(GreedyPlace(s).placement, testing::NaiveGreedy(s));
  }
}

TEST(GreedyPlace, TraceIsFeasibleAndConsistent) {
  Rng rng(67);
  for (int rep = 0; rep < 100; ++rep) {
    const Scenario s = testing::RandomScenario(rng, {4, 5, 4, 3, 3, 3.0});
    const GreedyResult r = GreedyPlace(s);
    int total_k = 0;
    for (int f = 0; f < s.n_files(); ++f) total_k += s.threshold(f);
    ASSERT_EQ(static_cast<int>(r.trace.size()),
              s.n_users() * std::min(s.capacity(), total_k));
    std::vector<int> used(s.n_users(), 0);
    for (const GreedyPick& pick : r.trace) {
      ASSERT_LE(++used[pick.user], s.capacity());
      ASSERT_GE(pick.gain, -1e-12);
    }
    ASSERT_EQ(r.refresh_counts.size(), r.trace.size());
    for (int c : r.refresh_counts) ASSERT_LE(c, s.n_users());
    ASSERT_NEAR(r.trace.back().cumulative, r.value, 1e-9);
    ASSERT_NEAR(r.value, OffloadingRatio(s, r.placement), 1e-15);
  }
}

TEST(GreedyPlace, HalfApproximationOnDpInstances) {
  Rng rng(71);
  for (int rep = 0; rep < 100; ++rep) {
    const Scenario s = testing::RandomScenario(rng, {3, 4, 3, 3, 2, 3.0});
    ASSERT_GE(GreedyPlace(s).value, 0.5 * DpOptimal(s).value - 1e-12);
  }
}

TEST(GreedyPlace, BeatsBaselinesOnAverage) {
  double greedy = 0.0, popular = 0.0, random = 0.0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const Scenario s = GenerateScenario({.seed = seed});
    greedy += GreedyPlace(s).value;
    popular += OffloadingRatio(s, PopularPlace(s));
    random += OffloadingRatio(s, RandomPlace(s, seed));
  }
  EXPECT_GT(greedy, popular);
  EXPECT_GT(greedy, random);
}

TEST(GreedyPlace, IncrementalStateTracksMaxima) {
  const Scenario s = GenerateScenario({.n_users = 6, .seed = 9});
  GreedyState st(s);
  for (int f = 0; f < s.n_files(); ++f) st.RefreshFile(f);
  EXPECT_TRUE(st.CheckBestPriorities());
  st.Add(2, 0);
  st.RefreshFile(0);
  EXPECT_TRUE(st.CheckBestPriorities());
}

TEST(GreedyTraceCsv, HeaderAndRows) {
  const Scenario s = MakeScenario(1, {}, 1, 1, {0.75, 0.25}, {1, 1});
  const std::string csv = GreedyTraceCsv(GreedyPlace(s).trace);
  EXPECT_EQ(csv, "iteration,user,file,gain,cumulative_value\n0,0,0,0.75,0.75\n");
}

}  // namespace
}  // namespace d2dcache
