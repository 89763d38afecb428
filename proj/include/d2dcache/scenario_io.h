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

// JSON documents for scenarios, rate matrices and placements. Matrices are
// row-major arrays of arrays; the string "inf" is accepted only on the
// diagonal of the rate matrix.
//
//   scenario:  {n_users, deadline_s, capacity, rates, budgets,
//               files: {popularity, thresholds}}
//   rates:     {n_users, rates}
//   placement: {n_users, n_files, counts [, strategy, value]}

#ifndef D2DCACHE_SCENARIO_IO_H_
#define D2DCACHE_SCENARIO_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "d2dcache/model.h"

namespace d2dcache {

std::string ScenarioToJson(const Scenario& s);
Scenario ScenarioFromJson(std::string_view text);

std::string RatesToJson(const RateMatrix& rates);
RateMatrix RatesFromJson(std::string_view text);

struct PlacementInfo {
  std::string strategy;
  double value = 0.0;
};

std::string PlacementToJson(const Placement& p,
                            const std::optional<PlacementInfo>& info = {});
Placement PlacementFromJson(std::string_view text);

// Whole-file helpers; throw ParseError on I/O failure.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace d2dcache

#endif  // D2DCACHE_SCENARIO_IO_H_
