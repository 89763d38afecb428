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

// Strategy dispatch, comparison sweeps over one scenario axis, and the
// per-user popular-file cache fraction report.

#ifndef D2DCACHE_EXPERIMENT_H_
#define D2DCACHE_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2dcache/error.h"
#include "d2dcache/exact_dp.h"
#include "d2dcache/model.h"
#include "d2dcache/parallel.h"

namespace d2dcache {

enum class Strategy { kDp, kGreedy, kPopular, kRandom };

std::string_view StrategyName(Strategy s);
std::optional<Strategy> ParseStrategy(std::string_view name);

// Runs one strategy and scores it with the analytic objective.
PlacementResult PlaceWith(Strategy strategy, const Scenario& s, uint64_t seed,
                          const DpOptions& dp = {});

enum class SweepAxis { kNUsers, kCapacity, kMeanRate, kGammaR };

std::string_view AxisName(SweepAxis a);
std::optional<SweepAxis> ParseAxis(std::string_view name);

// Sets one axis on a base configuration. For kMeanRate the Gamma variance
// shape * scale^2 of the base is held fixed while its mean becomes `value`.
ScenarioConfig ApplyAxis(ScenarioConfig base, SweepAxis axis, double value);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kCapacity;
  std::vector<double> values;
  std::vector<Strategy> strategies;
  int trials = 50;  // scenarios drawn per axis value
  uint64_t seed = 1;
  ScenarioConfig base;
  DpOptions dp;
};

struct SweepRow {
  double axis_value = 0.0;
  Strategy strategy = Strategy::kGreedy;
  double mean = 0.0;
  double std_error = 0.0;
  int runs = 0;
};

struct SweepResult {
  // Sorted by axis value, then strategy name. A (value, strategy) pair with
  // any failed run is omitted.
  std::vector<SweepRow> rows;
  std::vector<std::string> failures;
  std::optional<ErrorCode> first_error;
};

// Scenario r of every axis value uses the seed DeriveSeed(spec.seed, r), so
// axis values are compared on common random numbers. Throws InvalidArgument
// for an empty value or strategy list.
SweepResult RunSweep(const SweepSpec& spec, int workers = WorkerCount());

// Header "<axis>,strategy,mean_ratio,std_error".
std::string SweepCsv(const SweepSpec& spec, const SweepResult& result);

// Shortest decimal text that round-trips.
std::string FormatDouble(double v);

struct PopularFractionBin {
  double lo = 0.0;
  double hi = 0.0;
  int users = 0;
  double mean_fraction = 0.0;
};

// Users are binned by lambda_i = sum_{j != i} lambda_ij into [edges[k],
// edges[k+1]); each reports the share of its capacity holding the C most
// popular files.
std::vector<PopularFractionBin> PopularCacheFraction(
    const Scenario& s, const Placement& p, std::span<const double> edges);

std::string PopularFractionCsv(std::span<const PopularFractionBin> bins);

// Default bin edges for PopularCacheFraction, in contacts per second.
std::vector<double> DefaultPopularFractionEdges();

}  // namespace d2dcache

#endif  // D2DCACHE_EXPERIMENT_H_
