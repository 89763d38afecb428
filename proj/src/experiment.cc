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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "d2dcache/baselines.h"
#include "d2dcache/greedy.h"
#include "d2dcache/objective.h"
#include "d2dcache/random.h"

namespace d2dcache {
namespace {

constexpr uint64_t kRandomStrategyStream = 0x72616e646f6dULL;

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kDp:
      return "dp";
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kPopular:
      return "popular";
    case Strategy::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kDp, Strategy::kGreedy, Strategy::kPopular,
                     Strategy::kRandom}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

PlacementResult PlaceWith(Strategy strategy, const Scenario& s, uint64_t seed,
                          const DpOptions& dp) {
  switch (strategy) {
    case Strategy::kDp:
      return DpOptimal(s, dp);
    case Strategy::kGreedy: {
      GreedyResult g = GreedyPlace(s);
      return {std::move(g.placement), g.value};
    }
    case Strategy::kPopular: {
      Placement p = PopularPlace(s);
      const double v = OffloadingRatio(s, p);
      return {std::move(p), v};
    }
    case Strategy::kRandom: {
      Placement p = RandomPlace(s, seed);
      const double v = OffloadingRatio(s, p);
      return {std::move(p), v};
    }
  }
  throw InvalidArgument("unknown strategy");
}

std::string_view AxisName(SweepAxis a) {
  switch (a) {
    case SweepAxis::kNUsers:
      return "n_users";
    case SweepAxis::kCapacity:
      return "capacity";
    case SweepAxis::kMeanRate:
      return "mean_rate";
    case SweepAxis::kGammaR:
      return "gamma_r";
  }
  return "unknown";
}

std::optional<SweepAxis> ParseAxis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::kNUsers, SweepAxis::kCapacity,
                      SweepAxis::kMeanRate, SweepAxis::kGammaR}) {
    if (AxisName(a) == name) return a;
  }
  return std::nullopt;
}

ScenarioConfig ApplyAxis(ScenarioConfig base, SweepAxis axis, double value) {
  auto as_count = [&](const char* what) {
    if (!(value >= 1.0) || value != std::floor(value)) {
      throw InvalidArgument(std::string(what) + " must be a positive integer");
    }
    return static_cast<int>(value);
  };
  switch (axis) {
    case SweepAxis::kNUsers:
      base.n_users = as_count("n_users");
      break;
    case SweepAxis::kCapacity:
      base.capacity = as_count("capacity");
      break;
    case SweepAxis::kMeanRate: {
      if (!(value > 0.0)) throw InvalidArgument("mean rate must be positive");
      const double variance = base.rate_shape * base.rate_scale * base.rate_scale;
      base.rate_scale = variance / value;
      base.rate_shape = value / base.rate_scale;
      break;
    }
    case SweepAxis::kGammaR:
      if (!(value >= 0.0)) throw InvalidArgument("gamma_r must be >= 0");
      base.gamma_r = value;
      break;
  }
  return base;
}

SweepResult RunSweep(const SweepSpec& spec, int workers) {
  if (spec.values.empty()) throw InvalidArgument("sweep needs axis values");
  if (spec.strategies.empty()) throw InvalidArgument("sweep needs strategies");
  if (spec.trials < 1) throw InvalidArgument("sweep needs trials >= 1");
  const int n_values = static_cast<int>(spec.values.size());
  const int n_strategies = static_cast<int>(spec.strategies.size());
  const int64_t cells = static_cast<int64_t>(n_values) * spec.trials;

  struct Outcome {
    double value = 0.0;
    bool ok = false;
    std::string error;
    std::optional<ErrorCode> code;
  };
  std::vector<Outcome> outcomes(cells * n_strategies);

  ParallelFor(
      cells,
      [&](int64_t cell) {
        const int v = static_cast<int>(cell / spec.trials);
        const int r = static_cast<int>(cell % spec.trials);
        const uint64_t scenario_seed = DeriveSeed(spec.seed, r);
        std::optional<Scenario> scenario;
        std::string setup_error;
        std::optional<ErrorCode> setup_code;
        try {
          ScenarioConfig config = ApplyAxis(spec.base, spec.axis, spec.values[v]);
          config.seed = scenario_seed;
          scenario.emplace(GenerateScenario(config));
        } catch (const Error& e) {
          setup_error = e.what();
          setup_code = e.code();
        }
        for (int k = 0; k < n_strategies; ++k) {
          Outcome& out = outcomes[cell * n_strategies + k];
          if (!scenario) {
            out.error = setup_error;
            out.code = setup_code;
            continue;
          }
          try {
            out.value = PlaceWith(spec.strategies[k], *scenario,
                                  DeriveSeed(scenario_seed, kRandomStrategyStream),
                                  spec.dp)
                            .value;
            out.ok = true;
          } catch (const Error& e) {
            out.error = e.what();
            out.code = e.code();
          }
        }
      },
      workers);

  SweepResult result;
  std::vector<int> order(n_strategies);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return StrategyName(spec.strategies[a]) < StrategyName(spec.strategies[b]);
  });
  std::vector<int> value_order(n_values);
  std::iota(value_order.begin(), value_order.end(), 0);
  std::stable_sort(value_order.begin(), value_order.end(), [&](int a, int b) {
    return spec.values[a] < spec.values[b];
  });

  for (int v : value_order) {
    for (int k : order) {
      double sum = 0.0;
      double sum_sq = 0.0;
      bool all_ok = true;
      for (int r = 0; r < spec.trials; ++r) {
        const Outcome& out =
            outcomes[(static_cast<int64_t>(v) * spec.trials + r) * n_strategies + k];
        if (!out.ok) {
          all_ok = false;
          std::ostringstream msg;
          msg << AxisName(spec.axis) << "=" << FormatDouble(spec.values[v])
              << " strategy=" << StrategyName(spec.strategies[k])
              << " trial=" << r << ": " << out.error;
          result.failures.push_back(msg.str());
          if (!result.first_error) result.first_error = out.code;
          continue;
        }
        sum += out.value;
        sum_sq += out.value * out.value;
      }
      if (!all_ok) continue;
      SweepRow row;
      row.axis_value = spec.values[v];
      row.strategy = spec.strategies[k];
      row.runs = spec.trials;
      row.mean = sum / spec.trials;
      if (spec.trials > 1) {
        const double var =
            std::max(0.0, (sum_sq - spec.trials * row.mean * row.mean) /
                              (spec.trials - 1));
        row.std_error = std::sqrt(var / spec.trials);
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string FormatDouble(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string SweepCsv(const SweepSpec& spec, const SweepResult& result) {
  std::ostringstream out;
  out << AxisName(spec.axis) << ",strategy,mean_ratio,std_error\n";
  for (const SweepRow& row : result.rows) {
    out << FormatDouble(row.axis_value) << ',' << StrategyName(row.strategy)
        << ',' << FormatDouble(row.mean) << ',' << FormatDouble(row.std_error)
        << '\n';
  }
  return out.str();
}

std::vector<PopularFractionBin> PopularCacheFraction(
    const Scenario& s, const Placement& p, std::span<const double> edges) {
  RequireFeasible(p, s);
  if (edges.size() < 2) throw InvalidArgument("need at least two bin edges");
  for (size_t k = 1; k < edges.size(); ++k) {
    if (!(edges[k] > edges[k - 1])) {
      throw InvalidArgument("bin edges must be strictly increasing");
    }
  }
  std::vector<int> order(s.n_files());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s.popularity(a) > s.popularity(b);
  });
  const int top = std::min(s.capacity(), s.n_files());

  std::vector<PopularFractionBin> bins(edges.size() - 1);
  for (size_t k = 0; k + 1 < edges.size(); ++k) {
    bins[k].lo = edges[k];
    bins[k].hi = edges[k + 1];
  }
  std::vector<double> sums(bins.size(), 0.0);
  for (int i = 0; i < s.n_users(); ++i) {
    double rate = 0.0;
    for (int j = 0; j < s.n_users(); ++j) rate += s.rates().finite(i, j);
    int popular = 0;
    for (int k = 0; k < top; ++k) popular += p(i, order[k]);
    const double fraction = static_cast<double>(popular) / s.capacity();
    for (size_t k = 0; k < bins.size(); ++k) {
      if (rate >= bins[k].lo && rate < bins[k].hi) {
        ++bins[k].users;
        sums[k] += fraction;
        break;
      }
    }
  }
  for (size_t k = 0; k < bins.size(); ++k) {
    if (bins[k].users > 0) bins[k].mean_fraction = sums[k] / bins[k].users;
  }
  return bins;
}

std::string PopularFractionCsv(std::span<const PopularFractionBin> bins) {
  std::ostringstream out;
  out << "rate_lo,rate_hi,users,mean_fraction\n";
  for (const PopularFractionBin& b : bins) {
    out << FormatDouble(b.lo) << ',' << FormatDouble(b.hi) << ',' << b.users
        << ',' << FormatDouble(b.mean_fraction) << '\n';
  }
  return out.str();
}

std::vector<double> DefaultPopularFractionEdges() {
  return {0.0, 0.02, 0.04, 0.06, 0.08, 0.1, 0.15, 0.2,
          std::numeric_limits<double>::infinity()};
}

}  // namespace d2dcache
