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

#include "d2dcache/baselines.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "d2dcache/random.h"

namespace d2dcache {

Placement PopularPlace(const Scenario& s) {
  std::vector<int> order(s.n_files());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s.popularity(a) > s.popularity(b);
  });
  Placement p = Placement::Empty(s);
  for (int j = 0; j < s.n_users(); ++j) {
    int remaining = s.capacity();
    for (int f : order) {
      if (remaining == 0) break;
      const int take = std::min(s.threshold(f), remaining);
      p(j, f) = take;
      remaining -= take;
    }
  }
  return p;
}

Placement RandomPlace(const Scenario& s, uint64_t seed) {
  Placement p = Placement::Empty(s);
  std::vector<double> weights(s.n_files());
  for (int j = 0; j < s.n_users(); ++j) {
    Rng rng = MakeRng(seed, static_cast<uint64_t>(j));
    for (int draw = 0; draw < s.capacity(); ++draw) {
      double total = 0.0;
      for (int f = 0; f < s.n_files(); ++f) {
        weights[f] = p(j, f) < s.threshold(f) ? s.popularity(f) : 0.0;
        total += weights[f];
      }
      if (total <= 0.0) break;
      std::discrete_distribution<int> pick(weights.begin(), weights.end());
      ++p(j, pick(rng));
    }
  }
  return p;
}

}  // namespace d2dcache
