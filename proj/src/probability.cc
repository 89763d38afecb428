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

#include "d2dcache/probability.h"

#include <cmath>
#include <iostream>
#include <limits>

#include "d2dcache/error.h"

namespace d2dcache {

double PoissonLogPmf(int m, double mean) {
  if (m < 0) return -std::numeric_limits<double>::infinity();
  if (mean == 0.0) {
    return m == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return m * std::log(mean) - mean - std::lgamma(m + 1.0);
}

double PoissonPmf(int m, double mean) {
  return std::exp(PoissonLogPmf(m, mean));
}

double PoissonTail(double mean, int n) {
  if (!(mean >= 0.0)) throw InvalidArgument("Poisson mean must be >= 0");
  if (n < 0) throw InvalidArgument("Poisson tail index must be >= 0");
  if (n == 0) return 1.0;
  if (std::isinf(mean)) return 1.0;
  double below = 0.0;
  for (int m = 0; m < n; ++m) below += PoissonPmf(m, mean);
  return ClampProbability(1.0 - below);
}

double ClampProbability(double p) {
  if (p >= 0.0 && p <= 1.0) return p;
  const double clamped = p < 0.0 ? 0.0 : 1.0;
  if (std::abs(clamped - p) > 1e-9) {
    std::clog << "d2dcache: clamped probability " << p << " to " << clamped
              << "\n";
  }
  return clamped;
}

}  // namespace d2dcache
