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

// Optimal placement by dynamic programming over remaining-capacity states,
// one stage per file, plus an exhaustive-search reference solver.

#ifndef D2DCACHE_EXACT_DP_H_
#define D2DCACHE_EXACT_DP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "d2dcache/model.h"

namespace d2dcache {

// Mixed-radix coding of remaining-capacity vectors c_j in [0, C]:
// index = sum_j c_j (C + 1)^j.
class CapacityStateSpace {
 public:
  // Throws ResourceLimit if (C + 1)^n_users exceeds max_states.
  CapacityStateSpace(int n_users, int capacity, int64_t max_states);

  int n_users() const { return n_users_; }
  int capacity() const { return capacity_; }
  int64_t size() const { return size_; }

  int64_t Encode(std::span<const int> remaining) const;
  void Decode(int64_t index, std::span<int> remaining) const;
  int64_t Full() const { return size_ - 1; }

 private:
  int n_users_;
  int capacity_;
  int64_t size_;
};

// Best value OPT over the first (stage + 1) files for every capacity state,
// and the allocation of file `stage` that attains it, coded in the same radix
// as the state.
struct StageTable {
  int stage = 0;
  std::vector<double> value;
  std::vector<int32_t> choice;
};

struct DpOptions {
  int64_t max_states = 100000;
};

struct PlacementResult {
  Placement placement;
  double value = 0.0;
};

// Every stage table over the full state space. Intended for inspection of
// small instances; DpOptimal keeps only what backtracking needs.
std::vector<StageTable> DpStageTables(const Scenario& s,
                                      const DpOptions& options = {});

PlacementResult DpOptimal(const Scenario& s, const DpOptions& options = {});

struct ExhaustiveOptions {
  int64_t max_candidates = 10'000'000;
};

// Enumerates every feasible matrix; ties go to the lexicographically smallest
// (row-major). Throws ResourceLimit when the candidate count is above the
// guard.
PlacementResult ExhaustiveSearch(const Scenario& s,
                                 const ExhaustiveOptions& options = {});

}  // namespace d2dcache

#endif  // D2DCACHE_EXACT_DP_H_
