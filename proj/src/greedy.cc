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

#include <cassert>
#include <limits>
#include <sstream>

#include "d2dcache/probability.h"

namespace d2dcache {
namespace {

constexpr double kNoCandidate = -std::numeric_limits<double>::infinity();

}  // namespace

GreedyState::GreedyState(const Scenario& s)
    : GreedyState(s, Placement::Empty(s)) {}

GreedyState::GreedyState(const Scenario& s, const Placement& initial)
    : scenario_(&s),
      counts_(initial),
      used_(s.n_users(), 0),
      pmfs_(s.n_files()),
      priority_(s.n_users(), s.n_files(), kNoCandidate),
      best_value_(s.n_files(), kNoCandidate),
      best_user_(s.n_files(), -1) {
  RequireFeasible(initial, s);
  const int n = s.n_users();
  for (int j = 0; j < n; ++j) used_[j] = counts_.UserTotal(j);
  for (int f = 0; f < s.n_files(); ++f) {
    pmfs_[f].resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        pmfs_[f][static_cast<size_t>(i) * n + j] = MakeSegmentPmf(
            s.rate(i, j), s.deadline_s(), s.budget(i, j), counts_(j, f));
      }
    }
  }
}

bool GreedyState::CanAdd(int j, int f) const {
  return has_spare_capacity(j) && counts_(j, f) < scenario_->threshold(f);
}

double GreedyState::ComputeGain(int j, int f) const {
  const Scenario& s = *scenario_;
  const int n = s.n_users();
  const int x = counts_(j, f);
  const int room = s.threshold(f) - x - 1;
  assert(room >= 0);
  std::vector<SegmentPmf> others;
  others.reserve(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double p1 = 1.0;
    int bound = room;
    if (i != j) {
      const int b = s.budget(i, j);
      p1 = PoissonTail(s.rate(i, j).per_second * s.deadline_s(),
                       (x + 1 + b - 1) / b);
      if (p1 == 0.0) continue;
      // User i's own copies are always collected.
      bound -= counts_(i, f);
      if (bound < 0) continue;
    }
    others.clear();
    for (int jp = 0; jp < n; ++jp) {
      if (jp == j || jp == i || counts_(jp, f) == 0) continue;
      others.push_back(pmf(f, i, jp));
    }
    const double p2 = SumCdfFinalRow(others, bound)[bound];
    sum += p1 * p2;
  }
  return s.popularity(f) / (n * s.threshold(f)) * sum;
}

void GreedyState::Add(int j, int f) {
  assert(CanAdd(j, f));
  const Scenario& s = *scenario_;
  const int n = s.n_users();
  ++counts_(j, f);
  ++used_[j];
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    pmfs_[f][static_cast<size_t>(i) * n + j] = MakeSegmentPmf(
        s.rate(i, j), s.deadline_s(), s.budget(i, j), counts_(j, f));
  }
}

int GreedyState::RefreshFile(int f) {
  int evaluated = 0;
  for (int j = 0; j < scenario_->n_users(); ++j) {
    if (CanAdd(j, f)) {
      priority_(j, f) = ComputeGain(j, f);
      ++evaluated;
    } else {
      priority_(j, f) = kNoCandidate;
    }
  }
  RescanBest(f);
  return evaluated;
}

void GreedyState::RetireUser(int j) {
  for (int f = 0; f < scenario_->n_files(); ++f) {
    priority_(j, f) = kNoCandidate;
    if (best_user_[f] == j) RescanBest(f);
  }
}

void GreedyState::RescanBest(int f) {
  best_value_[f] = kNoCandidate;
  best_user_[f] = -1;
  for (int j = 0; j < scenario_->n_users(); ++j) {
    if (priority_(j, f) == kNoCandidate) continue;
    if (best_user_[f] < 0 || priority_(j, f) > best_value_[f]) {
      best_value_[f] = priority_(j, f);
      best_user_[f] = j;
    }
  }
}

bool GreedyState::CheckBestPriorities() const {
  for (int f = 0; f < scenario_->n_files(); ++f) {
    double best = kNoCandidate;
    int user = -1;
    for (int j = 0; j < scenario_->n_users(); ++j) {
      if (!CanAdd(j, f)) continue;
      if (user < 0 || priority_(j, f) > best) {
        best = priority_(j, f);
        user = j;
      }
    }
    if (user != best_user_[f] || (user >= 0 && best != best_value_[f])) {
      return false;
    }
  }
  return true;
}

double MarginalGain(const Scenario& s, const GreedyState& st, int j, int f) {
  if (&st.scenario() != &s) {
    throw InvalidArgument("greedy state belongs to a different scenario");
  }
  if (j < 0 || j >= s.n_users() || f < 0 || f >= s.n_files()) {
    throw InvalidArgument("user or file index out of range");
  }
  if (!st.has_spare_capacity(j)) {
    throw InvalidArgument("user " + std::to_string(j) + " has a full cache");
  }
  if (st.count(j, f) >= s.threshold(f)) {
    throw InvalidArgument("user " + std::to_string(j) + " already holds K_f " +
                          "segments of file " + std::to_string(f));
  }
  return st.ComputeGain(j, f);
}

GreedyResult GreedyPlace(const Scenario& s) {
  GreedyState st(s);
  for (int f = 0; f < s.n_files(); ++f) st.RefreshFile(f);

  GreedyResult result;
  const int budget = s.n_users() * s.capacity();
  double cumulative = 0.0;
  for (int it = 0; it < budget; ++it) {
    int file = -1;
    double gain = kNoCandidate;
    for (int f = 0; f < s.n_files(); ++f) {
      if (st.best_user(f) < 0) continue;
      if (file < 0 || st.best_priority(f) > gain) {
        file = f;
        gain = st.best_priority(f);
      }
    }
    if (file < 0) break;
    const int user = st.best_user(file);
    st.Add(user, file);
    cumulative += gain;
    result.trace.push_back({it, user, file, gain, cumulative});
    if (!st.has_spare_capacity(user)) st.RetireUser(user);
    result.refresh_counts.push_back(st.RefreshFile(file));
    assert(st.CheckBestPriorities());
  }
  result.placement = st.placement();
  result.value = OffloadingRatio(s, result.placement);
  return result;
}

std::string GreedyTraceCsv(const std::vector<GreedyPick>& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,user,file,gain,cumulative_value\n";
  for (const GreedyPick& p : trace) {
    out << p.iteration << ',' << p.user << ',' << p.file << ',' << p.gain
        << ',' << p.cumulative << '\n';
  }
  return out.str();
}

}  // namespace d2dcache
