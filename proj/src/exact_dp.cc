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

#include "d2dcache/exact_dp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "d2dcache/objective.h"

namespace d2dcache {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

// Lazily evaluated U_m over allocation codes of one stage.
class UtilityMemo {
 public:
  UtilityMemo(const Scenario& s, const CapacityStateSpace& space)
      : scenario_(s), space_(space), values_(space.size(), kUnset),
        column_(s.n_users()) {}

  void Reset(int file) {
    file_ = file;
    std::fill(values_.begin(), values_.end(), kUnset);
  }

  double Get(int64_t code) {
    double& v = values_[code];
    if (std::isnan(v)) {
      space_.Decode(code, column_);
      v = FileUtility(scenario_, file_, column_);
    }
    return v;
  }

 private:
  const Scenario& scenario_;
  const CapacityStateSpace& space_;
  std::vector<double> values_;
  std::vector<int> column_;
  int file_ = 0;
};

// Best allocation of file `m` for the state with remaining capacities `rem`,
// scanning x_j in [0, min(rem_j, K_m)] in odometer order with user 0 fastest.
// The first maximum found is kept.
std::pair<double, int32_t> BestAllocation(const Scenario& s,
                                          const CapacityStateSpace& space,
                                          int m, std::span<const int> rem,
                                          int64_t state,
                                          const std::vector<double>& prev,
                                          UtilityMemo& memo,
                                          std::vector<int>& alloc) {
  const int n = s.n_users();
  const int k_m = s.threshold(m);
  std::fill(alloc.begin(), alloc.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  int64_t best_code = 0;
  while (true) {
    const int64_t code = space.Encode(alloc);
    const double v = memo.Get(code) + prev[state - code];
    if (v > best) {
      best = v;
      best_code = code;
    }
    int j = 0;
    while (j < n) {
      if (alloc[j] < std::min(rem[j], k_m)) {
        ++alloc[j];
        break;
      }
      alloc[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return {best, static_cast<int32_t>(best_code)};
}

StageTable FirstStage(const Scenario& s, const CapacityStateSpace& space,
                      UtilityMemo& memo) {
  StageTable t{0, std::vector<double>(space.size()),
               std::vector<int32_t>(space.size())};
  std::vector<int> rem(s.n_users());
  memo.Reset(0);
  for (int64_t state = 0; state < space.size(); ++state) {
    space.Decode(state, rem);
    for (int& c : rem) c = std::min(c, s.threshold(0));
    const int64_t code = space.Encode(rem);
    t.value[state] = memo.Get(code);
    t.choice[state] = static_cast<int32_t>(code);
  }
  return t;
}

struct DpRun {
  std::vector<StageTable> tables;  // values dropped for interior stages
  double value = 0.0;
};

DpRun Solve(const Scenario& s, const DpOptions& options, bool keep_values) {
  const int n = s.n_users();
  const int n_files = s.n_files();
  const CapacityStateSpace space(n, s.capacity(), options.max_states);
  UtilityMemo memo(s, space);
  DpRun run;
  run.tables.reserve(n_files);
  run.tables.push_back(FirstStage(s, space, memo));

  std::vector<int> rem(n);
  std::vector<int> alloc(n);
  for (int m = 1; m < n_files; ++m) {
    memo.Reset(m);
    const std::vector<double>& prev = run.tables.back().value;
    const bool last = m == n_files - 1;
    StageTable t{m, std::vector<double>(space.size(), 0.0),
                 std::vector<int32_t>(space.size(), 0)};
    // The last stage only needs the full-capacity state unless every table
    // is requested.
    const int64_t begin = (last && !keep_values) ? space.Full() : 0;
    for (int64_t state = begin; state < space.size(); ++state) {
      space.Decode(state, rem);
      auto [v, code] = BestAllocation(s, space, m, rem, state, prev, memo, alloc);
      t.value[state] = v;
      t.choice[state] = code;
    }
    if (!keep_values) run.tables.back().value = {};
    run.tables.push_back(std::move(t));
  }
  run.value = run.tables.back().value[space.Full()];
  return run;
}

}  // namespace

CapacityStateSpace::CapacityStateSpace(int n_users, int capacity,
                                       int64_t max_states)
    : n_users_(n_users), capacity_(capacity), size_(1) {
  if (n_users < 1 || capacity < 0) {
    throw InvalidArgument("state space needs n_users >= 1 and capacity >= 0");
  }
  const int64_t limit = std::min<int64_t>(
      max_states, std::numeric_limits<int32_t>::max());
  for (int j = 0; j < n_users; ++j) {
    if (size_ > limit / (capacity + 1)) {
      throw ResourceLimit("DP state space (C+1)^N_u = " +
                          std::to_string(capacity + 1) + "^" +
                          std::to_string(n_users) + " exceeds the limit of " +
                          std::to_string(limit) + " states");
    }
    size_ *= capacity + 1;
  }
}

int64_t CapacityStateSpace::Encode(std::span<const int> remaining) const {
  int64_t index = 0;
  for (int j = n_users_ - 1; j >= 0; --j) {
    index = index * (capacity_ + 1) + remaining[j];
  }
  return index;
}

void CapacityStateSpace::Decode(int64_t index, std::span<int> remaining) const {
  for (int j = 0; j < n_users_; ++j) {
    remaining[j] = static_cast<int>(index % (capacity_ + 1));
    index /= capacity_ + 1;
  }
}

std::vector<StageTable> DpStageTables(const Scenario& s,
                                      const DpOptions& options) {
  return Solve(s, options, /*keep_values=*/true).tables;
}

PlacementResult DpOptimal(const Scenario& s, const DpOptions& options) {
  DpRun run = Solve(s, options, /*keep_values=*/false);
  const CapacityStateSpace space(s.n_users(), s.capacity(), options.max_states);
  PlacementResult result{Placement::Empty(s), run.value};
  std::vector<int> alloc(s.n_users());
  int64_t state = space.Full();
  for (int m = s.n_files() - 1; m >= 0; --m) {
    const int32_t code = run.tables[m].choice[state];
    space.Decode(code, alloc);
    for (int j = 0; j < s.n_users(); ++j) result.placement(j, m) = alloc[j];
    state -= code;
  }
  return result;
}

PlacementResult ExhaustiveSearch(const Scenario& s,
                                 const ExhaustiveOptions& options) {
  const int n = s.n_users();
  const int n_files = s.n_files();
  // Feasible per-user rows in lexicographic order.
  std::vector<std::vector<int>> rows;
  std::vector<int> row(n_files, 0);
  while (true) {
    int total = 0;
    for (int x : row) total += x;
    if (total <= s.capacity()) rows.push_back(row);
    int f = n_files - 1;
    while (f >= 0) {
      if (row[f] < s.threshold(f)) {
        ++row[f];
        break;
      }
      row[f] = 0;
      --f;
    }
    if (f < 0) break;
  }
  const int64_t r = static_cast<int64_t>(rows.size());
  int64_t candidates = 1;
  for (int j = 0; j < n; ++j) {
    if (candidates > options.max_candidates / r) {
      throw ResourceLimit("exhaustive search over " + std::to_string(r) + "^" +
                          std::to_string(n) +
                          " placements exceeds the guard of " +
                          std::to_string(options.max_candidates));
    }
    candidates *= r;
  }

  std::vector<int> pick(n, 0);
  Placement current = Placement::Empty(s);
  PlacementResult best{current, -std::numeric_limits<double>::infinity()};
  while (true) {
    for (int j = 0; j < n; ++j) {
      for (int f = 0; f < n_files; ++f) current(j, f) = rows[pick[j]][f];
    }
    const double v = OffloadingRatio(s, current);
    if (v > best.value) best = {current, v};
    int j = n - 1;
    while (j >= 0) {
      if (pick[j] + 1 < r) {
        ++pick[j];
        break;
      }
      pick[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return best;
}

}  // namespace d2dcache
