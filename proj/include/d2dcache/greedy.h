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

// Greedy placement for the offloading ratio viewed as a monotone submodular
// set function over segments y_{j,f,k}, under the partition matroid that
// allows at most C segments per user. Segments of the same file at the same
// user are interchangeable, so the chosen set is kept as counts x[j][f].

#ifndef D2DCACHE_GREEDY_H_
#define D2DCACHE_GREEDY_H_

#include <string>
#include <vector>

#include "d2dcache/matrix.h"
#include "d2dcache/model.h"
#include "d2dcache/objective.h"

namespace d2dcache {

class GreedyState {
 public:
  explicit GreedyState(const Scenario& s);
  // Starts from an existing feasible placement. Throws ConstraintViolation
  // otherwise.
  GreedyState(const Scenario& s, const Placement& initial);

  const Scenario& scenario() const { return *scenario_; }
  const Placement& placement() const { return counts_; }
  int count(int j, int f) const { return counts_(j, f); }
  int used(int j) const { return used_[j]; }
  bool has_spare_capacity(int j) const {
    return used_[j] < scenario_->capacity();
  }
  // Segment (j, f) may be added without leaving the feasible set.
  bool CanAdd(int j, int f) const;

  // Gain of caching one more segment of f at j:
  //   p_f / (N_u K_f) * sum_i Pr[M_ij >= ceil((x_jf + 1) / B_ij)]
  //                        * Pr[sum_{j' != j} V_ij' <= K_f - x_jf - 1].
  // Requires CanAdd(j, f).
  double ComputeGain(int j, int f) const;

  // Adds one segment and refreshes the cached V_ij distributions of file f.
  // Priorities are not touched; see RefreshFile.
  void Add(int j, int f);

  // Recomputes the priority of every addable (j, f) for this file and the
  // per-file maximum. Returns the number of gains evaluated.
  int RefreshFile(int f);
  // Drops user j from the candidate set once its cache is full.
  void RetireUser(int j);

  double priority(int j, int f) const { return priority_(j, f); }
  // Best priority of file f and the smallest user attaining it; -1 if no
  // segment of f can be added anywhere.
  double best_priority(int f) const { return best_value_[f]; }
  int best_user(int f) const { return best_user_[f]; }

  // Rescans the per-file maxima and reports whether they match the stored
  // ones exactly.
  bool CheckBestPriorities() const;

 private:
  void RescanBest(int f);
  const SegmentPmf& pmf(int f, int i, int j) const {
    return pmfs_[f][static_cast<size_t>(i) * scenario_->n_users() + j];
  }

  const Scenario* scenario_;
  Placement counts_;
  std::vector<int> used_;
  // pmfs_[f][i * N_u + j]: distribution of min(B_ij M_ij, x_jf).
  std::vector<std::vector<SegmentPmf>> pmfs_;
  Matrix<double> priority_;
  std::vector<double> best_value_;
  std::vector<int> best_user_;
};

// ComputeGain with its preconditions checked; throws InvalidArgument if
// x_jf = K_f or user j is full.
double MarginalGain(const Scenario& s, const GreedyState& st, int j, int f);

struct GreedyPick {
  int iteration = 0;
  int user = 0;
  int file = 0;
  double gain = 0.0;
  double cumulative = 0.0;
};

struct GreedyResult {
  Placement placement;
  double value = 0.0;
  std::vector<GreedyPick> trace;
  // Gains evaluated after each pick.
  std::vector<int> refresh_counts;
};

GreedyResult GreedyPlace(const Scenario& s);

// iteration,user,file,gain,cumulative_value
std::string GreedyTraceCsv(const std::vector<GreedyPick>& trace);

}  // namespace d2dcache

#endif  // D2DCACHE_GREEDY_H_
