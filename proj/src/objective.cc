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

#include "d2dcache/objective.h"

#include <algorithm>
#include <string>

#include "d2dcache/probability.h"

namespace d2dcache {

SegmentPmf MakeSegmentPmf(Rate rate, double deadline_s, int budget,
                          int cached) {
  if (cached < 0) throw InvalidArgument("cached segment count must be >= 0");
  if (budget < 1) throw InvalidArgument("per-contact budget must be >= 1");
  if (!rate.infinite && !(rate.per_second >= 0.0)) {
    throw InvalidArgument("contact rate must be >= 0");
  }
  SegmentPmf pmf;
  pmf.support_max = cached;
  pmf.mass.assign(cached + 1, 0.0);
  if (cached == 0 || rate.infinite) {
    pmf.mass[cached] = 1.0;
    return pmf;
  }
  const double mean = rate.per_second * deadline_s;
  for (int z = 0; z < cached; z += budget) {
    pmf.mass[z] = ClampProbability(PoissonPmf(z / budget, mean));
  }
  const int contacts_to_saturate = (cached + budget - 1) / budget;
  pmf.mass[cached] = PoissonTail(mean, contacts_to_saturate);
  return pmf;
}

SumCdfTable SumCdf(std::span<const SegmentPmf> pmfs, int k_prime) {
  if (k_prime < 0) throw InvalidArgument("k_prime must be >= 0");
  const int n = static_cast<int>(pmfs.size());
  SumCdfTable table(n, k_prime);
  for (int k = 0; k <= k_prime; ++k) table.at(0, k) = 1.0;
  for (int j = 1; j <= n; ++j) {
    const SegmentPmf& v = pmfs[j - 1];
    for (int k = 0; k <= k_prime; ++k) {
      double acc = 0.0;
      const int top = std::min(k, v.support_max);
      for (int z = 0; z <= top; ++z) acc += v.mass[z] * table.at(j - 1, k - z);
      table.at(j, k) = ClampProbability(acc);
    }
  }
  return table;
}

std::vector<double> SumCdfFinalRow(std::span<const SegmentPmf> pmfs,
                                   int k_prime) {
  if (k_prime < 0) throw InvalidArgument("k_prime must be >= 0");
  std::vector<double> prev(k_prime + 1, 1.0);
  std::vector<double> next(k_prime + 1);
  for (const SegmentPmf& v : pmfs) {
    if (v.support_max == 0) continue;  // point mass at zero
    for (int k = 0; k <= k_prime; ++k) {
      double acc = 0.0;
      const int top = std::min(k, v.support_max);
      for (int z = 0; z <= top; ++z) acc += v.mass[z] * prev[k - z];
      next[k] = ClampProbability(acc);
    }
    prev.swap(next);
  }
  return prev;
}

double FileUtility(const Scenario& s, int f, std::span<const int> column) {
  const int n = s.n_users();
  if (f < 0 || f >= s.n_files()) throw InvalidArgument("file index out of range");
  if (static_cast<int>(column.size()) != n) {
    throw InvalidArgument("placement column must have one entry per user");
  }
  const int k_f = s.threshold(f);
  for (int j = 0; j < n; ++j) {
    if (column[j] < 0 || column[j] > k_f) {
      throw InvalidArgument("user " + std::to_string(j) + " caches " +
                            std::to_string(column[j]) + " segments of file " +
                            std::to_string(f) + ", allowed range is [0, " +
                            std::to_string(k_f) + "]");
    }
  }
  if (std::all_of(column.begin(), column.end(), [](int x) { return x == 0; })) {
    return 0.0;
  }

  std::vector<SegmentPmf> others;
  others.reserve(n);
  double expected_total = 0.0;
  for (int i = 0; i < n; ++i) {
    const int own = column[i];
    if (own >= k_f) {
      expected_total += k_f;
      continue;
    }
    // E[min(own + S, K)] = own + E[min(S, R)] with R = K - own >= 1, where S
    // sums the other users' deliveries.
    const int r = k_f - own;
    others.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i || column[j] == 0) continue;
      others.push_back(MakeSegmentPmf(s.rate(i, j), s.deadline_s(),
                                      s.budget(i, j), column[j]));
    }
    const std::vector<double> cdf = SumCdfFinalRow(others, r - 1);
    double expected = 0.0;
    for (int q = 1; q < r; ++q) expected += q * (cdf[q] - cdf[q - 1]);
    expected += r * (1.0 - cdf[r - 1]);
    expected_total += own + expected;
  }
  return s.popularity(f) / k_f * expected_total / n;
}

double OffloadingRatio(const Scenario& s, const Placement& p) {
  RequireFeasible(p, s);
  std::vector<int> column(s.n_users());
  double ratio = 0.0;
  for (int f = 0; f < s.n_files(); ++f) {
    for (int j = 0; j < s.n_users(); ++j) column[j] = p(j, f);
    ratio += FileUtility(s, f, column);
  }
  return ratio;
}

}  // namespace d2dcache
