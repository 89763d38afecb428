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


// Command-line front end: scenario generation, placement, evaluation,
// comparison sweeps, and mobility utilities.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d2dcache/error.h"
#include "d2dcache/exact_dp.h"
#include "d2dcache/experiment.h"
#include "d2dcache/greedy.h"
#include "d2dcache/mobility.h"
#include "d2dcache/model.h"
#include "d2dcache/objective.h"
#include "d2dcache/parallel.h"
#include "d2dcache/scenario_io.h"
#include "d2dcache/trace_io.h"

namespace d2dcache {
namespace {

constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitConstraint = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kResourceLimit:
      return kExitResource;
    case ErrorCode::kConstraintViolation:
      return kExitConstraint;
    case ErrorCode::kParse:
      return kExitOther;
  }
  return kExitOther;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

void AddScenarioFlags(CLI::App* cmd, ScenarioConfig& c) {
  cmd->add_option("--users", c.n_users, "Number of users")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--files", c.n_files, "Number of files")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--gamma-r", c.gamma_r, "Zipf exponent")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--kmax", c.k_max, "Largest segments-per-file threshold")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--capacity", c.capacity, "Segments cached per user")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--deadline", c.deadline_s, "Deadline in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rate-shape", c.rate_shape, "Gamma shape of contact rates")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rate-scale", c.rate_scale, "Gamma scale of contact rates")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Segments per contact")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
}

Scenario LoadScenario(const std::string& path, const std::string& rates_path) {
  Scenario s = ScenarioFromJson(ReadFile(path));
  if (!rates_path.empty()) {
    RateMatrix rates = RatesFromJson(ReadFile(rates_path));
    if (rates.size() != s.n_users()) {
      throw InvalidArgument("rate matrix size does not match the scenario");
    }
    s = s.WithRates(std::move(rates));
  }
  return s;
}

template <typename T>
std::vector<T> ParseList(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      T v;
      if constexpr (std::is_same_v<T, double>) {
        v = std::stod(item, &used);
      } else {
        v = std::stoi(item, &used);
      }
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("bad ") + what + " value '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument(std::string("empty ") + what + " list");
  return out;
}

int Main(int argc, char** argv) {
  CLI::App app{"Segment cache placement for device-to-device offloading"};
  app.require_subcommand(1);

  // generate
  ScenarioConfig gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random scenario");
  AddScenarioFlags(generate, gen);
  generate->add_option("-o,--output", gen_out, "Scenario JSON (default stdout)");

  // place
  std::string place_scenario, place_rates, place_out, place_trace, place_report,
      place_report_out, place_bins;
  std::string place_strategy = "greedy";
  uint64_t place_seed = 1;
  int64_t place_max_states = DpOptions{}.max_states;
  auto* place = app.add_subcommand("place", "Compute a cache placement");
  place->add_option("scenario", place_scenario, "Scenario JSON")->required();
  place->add_option("--strategy", place_strategy, "dp | greedy | random | popular")
      ->check(CLI::IsMember({"dp", "greedy", "random", "popular"}));
  place->add_option("--seed", place_seed, "Seed for the random strategy");
  place->add_option("--rates", place_rates, "Replace the scenario rates");
  place->add_option("-o,--output", place_out, "Placement JSON");
  place->add_option("--trace-csv", place_trace, "Greedy pick trace CSV");
  place->add_option("--report", place_report, "Extra report")
      ->check(CLI::IsMember({"popfrac"}));
  place->add_option("--report-out", place_report_out, "Report CSV (default stdout)");
  place->add_option("--bins", place_bins,
                    "Comma-separated contact-rate bin edges for popfrac");
  place->add_option("--max-states", place_max_states, "DP state limit")
      ->check(CLI::PositiveNumber);

  // evaluate
  std::string eval_scenario, eval_placement, eval_rates, eval_trace;
  std::string eval_mode = "analytic";
  int64_t eval_trials = 100000;
  uint64_t eval_seed = 1;
  std::optional<double> eval_horizon, eval_step;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a placement");
  evaluate->add_option("scenario", eval_scenario, "Scenario JSON")->required();
  evaluate->add_option("placement", eval_placement, "Placement JSON")->required();
  evaluate->add_option("--mode", eval_mode, "analytic | mc | replay")
      ->check(CLI::IsMember({"analytic", "mc", "replay"}));
  evaluate->add_option("--trials", eval_trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--trace", eval_trace, "Contact trace CSV for replay");
  evaluate->add_option("--horizon", eval_horizon, "Trace horizon in seconds")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--epoch-step", eval_step,
                       "Spacing of replay request epochs (default: deadline)")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", eval_seed, "Random seed");
  evaluate->add_option("--rates", eval_rates, "Replace the scenario rates");

  // compare
  SweepSpec sweep;
  std::string cmp_axis = "capacity", cmp_values, cmp_strategies = "greedy,random,popular",
              cmp_out;
  auto* compare = app.add_subcommand("compare", "Sweep one axis and compare strategies");
  AddScenarioFlags(compare, sweep.base);
  compare->add_option("--axis", cmp_axis, "n_users | capacity | mean_rate | gamma_r")
      ->check(CLI::IsMember({"n_users", "capacity", "mean_rate", "gamma_r"}));
  compare->add_option("--values", cmp_values, "Comma-separated axis values")
      ->required();
  compare->add_option("--strategies", cmp_strategies,
                      "Comma-separated strategies");
  compare->add_option("--trials", sweep.trials, "Scenarios per axis value")
      ->check(CLI::PositiveNumber);
  compare->add_option("--max-states", sweep.dp.max_states, "DP state limit")
      ->check(CLI::PositiveNumber);
  compare->add_option("-o,--output", cmp_out, "Results CSV (default stdout)");

  // rwp
  RwpParams rwp;
  std::string rwp_out, rwp_velocity_out;
  auto* rwp_cmd = app.add_subcommand("rwp", "Random-waypoint contact trace");
  rwp_cmd->add_option("--area", rwp.area_side_m, "Square side in metres")
      ->check(CLI::PositiveNumber);
  rwp_cmd->add_option("--range", rwp.tx_range_m, "Transmission range in metres")
      ->check(CLI::PositiveNumber);
  rwp_cmd->add_option("--users", rwp.n_users, "Number of users")
      ->check(CLI::PositiveNumber);
  rwp_cmd->add_option("--velocity", rwp.mean_velocity_mps, "Mean velocity m/s")
      ->check(CLI::NonNegativeNumber);
  rwp_cmd->add_option("--duration", rwp.duration_s, "Simulated seconds")
      ->check(CLI::PositiveNumber);
  rwp_cmd->add_option("--seed", rwp.seed, "Random seed");
  rwp_cmd->add_option("-o,--output", rwp_out, "Trace CSV (default stdout)");
  rwp_cmd->add_option("--velocities-out", rwp_velocity_out,
                      "Per-user average velocity CSV");

  // estimate-rates
  std::string est_trace, est_out;
  int est_users = 0;
  std::optional<double> est_horizon;
  auto* estimate = app.add_subcommand("estimate-rates", "Pairwise rates from a trace");
  estimate->add_option("trace", est_trace, "Contact trace CSV")->required();
  estimate->add_option("--users", est_users, "Number of users")
      ->required()
      ->check(CLI::PositiveNumber);
  estimate->add_option("--horizon", est_horizon, "Trace horizon in seconds")
      ->check(CLI::PositiveNumber);
  estimate->add_option("-o,--output", est_out, "Rates JSON (default stdout)");

  // poisson-trace
  std::string pt_scenario, pt_rates, pt_out;
  double pt_horizon = 100000.0, pt_duration = 0.0;
  uint64_t pt_seed = 1;
  auto* poisson = app.add_subcommand("poisson-trace",
                                     "Contact trace sampled from Poisson rates");
  auto* pt_from_scenario =
      poisson->add_option("--scenario", pt_scenario, "Take rates from a scenario");
  auto* pt_from_rates = poisson->add_option("--rates", pt_rates, "Rates JSON");
  pt_from_scenario->excludes(pt_from_rates);
  poisson->add_option("--horizon", pt_horizon, "Horizon in seconds")
      ->check(CLI::PositiveNumber);
  poisson->add_option("--duration", pt_duration, "Contact duration in seconds")
      ->check(CLI::NonNegativeNumber);
  poisson->add_option("--seed", pt_seed, "Random seed");
  poisson->add_option("-o,--output", pt_out, "Trace CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      Emit(gen_out, ScenarioToJson(GenerateScenario(gen)));
    } else if (*place) {
      const Scenario s = LoadScenario(place_scenario, place_rates);
      const Strategy strategy = *ParseStrategy(place_strategy);
      if (!place_trace.empty() && strategy != Strategy::kGreedy) {
        throw InvalidArgument("--trace-csv requires --strategy greedy");
      }
      PlacementResult result;
      if (strategy == Strategy::kGreedy) {
        GreedyResult g = GreedyPlace(s);
        if (!place_trace.empty()) WriteFile(place_trace, GreedyTraceCsv(g.trace));
        result = {std::move(g.placement), g.value};
      } else {
        result = PlaceWith(strategy, s, place_seed,
                           DpOptions{.max_states = place_max_states});
      }
      if (!place_out.empty()) {
        WriteFile(place_out,
                  PlacementToJson(result.placement,
                                  PlacementInfo{place_strategy, result.value}));
      }
      std::cout << FormatDouble(result.value) << '\n';
      if (!place_report.empty()) {
        const std::vector<double> edges =
            place_bins.empty() ? DefaultPopularFractionEdges()
                               : ParseList<double>(place_bins, "bin edge");
        Emit(place_report_out,
             PopularFractionCsv(PopularCacheFraction(s, result.placement, edges)));
      }
    } else if (*evaluate) {
      if (eval_mode == "replay" && eval_trace.empty()) {
        std::cerr << "error: --mode replay requires --trace\n";
        return kExitUsage;
      }
      const Scenario s = LoadScenario(eval_scenario, eval_rates);
      const Placement p = PlacementFromJson(ReadFile(eval_placement));
      if (eval_mode == "analytic") {
        std::cout << FormatDouble(OffloadingRatio(s, p)) << '\n';
      } else {
        McEstimate e;
        if (eval_mode == "mc") {
          e = MonteCarloRatio(s, p, eval_trials, eval_seed);
        } else {
          const ContactTrace trace =
              ContactTraceFromCsv(ReadFile(eval_trace), eval_horizon);
          const std::vector<double> epochs = TiledEpochs(
              trace.horizon_s(), eval_step.value_or(s.deadline_s()));
          if (epochs.empty()) {
            throw InvalidArgument("trace horizon is shorter than the deadline");
          }
          e = ReplayRatio(p, trace, s, epochs, eval_seed);
        }
        std::cout << "mean,std_error,trials\n"
                  << FormatDouble(e.mean) << ',' << FormatDouble(e.std_error)
                  << ',' << e.trials << '\n';
      }
    } else if (*compare) {
      sweep.axis = *ParseAxis(cmp_axis);
      sweep.values = ParseList<double>(cmp_values, "axis");
      sweep.seed = sweep.base.seed;
      std::stringstream in(cmp_strategies);
      std::string name;
      while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        const std::optional<Strategy> st = ParseStrategy(name);
        if (!st) throw InvalidArgument("unknown strategy '" + name + "'");
        sweep.strategies.push_back(*st);
      }
      if (sweep.strategies.empty()) throw InvalidArgument("empty strategy list");
      const SweepResult result = RunSweep(sweep, WorkerCount());
      Emit(cmp_out, SweepCsv(sweep, result));
      if (!result.failures.empty()) {
        for (const std::string& f : result.failures) {
          std::cerr << "error: " << f << '\n';
        }
        return result.first_error ? ExitCodeFor(*result.first_error) : kExitOther;
      }
    } else if (*rwp_cmd) {
      const RwpTrace t = RwpGenerate(rwp);
      Emit(rwp_out, ContactTraceToCsv(t.trace));
      if (!rwp_velocity_out.empty()) {
        std::ostringstream v;
        v << "user,velocity_mps\n";
        for (size_t i = 0; i < t.user_velocity_mps.size(); ++i) {
          v << i << ',' << FormatDouble(t.user_velocity_mps[i]) << '\n';
        }
        WriteFile(rwp_velocity_out, v.str());
      }
    } else if (*estimate) {
      const ContactTrace trace =
          ContactTraceFromCsv(ReadFile(est_trace), est_horizon);
      Emit(est_out, RatesToJson(EstimateRates(trace, est_users)));
    } else if (*poisson) {
      RateMatrix rates;
      if (!pt_scenario.empty()) {
        rates = ScenarioFromJson(ReadFile(pt_scenario)).rates();
      } else if (!pt_rates.empty()) {
        rates = RatesFromJson(ReadFile(pt_rates));
      } else {
        std::cerr << "error: poisson-trace needs --scenario or --rates\n";
        return kExitUsage;
      }
      Emit(pt_out, ContactTraceToCsv(
                       PoissonContactTrace(rates, pt_horizon, pt_duration, pt_seed)));
    }
  } catch (const ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const Violation& v : e.violations()) {
      std::cerr << "  " << ToString(v) << '\n';
    }
    return kExitConstraint;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}

}  // namespace
}  // namespace d2dcache

int main(int argc, char** argv) { return d2dcache::Main(argc, argv); }
