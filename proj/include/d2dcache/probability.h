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

#ifndef D2DCACHE_PROBABILITY_H_
#define D2DCACHE_PROBABILITY_H_

namespace d2dcache {

// log Pr[M = m] for M ~ Poisson(mean); -inf when the mass is zero.
double PoissonLogPmf(int m, double mean);

double PoissonPmf(int m, double mean);

// Pr[M >= n] for M ~ Poisson(mean), as 1 minus the partial pmf sum evaluated
// in log space. Equals 1 - Gamma(n, mean) / (n - 1)! for n >= 1.
// Throws InvalidArgument for a negative mean or n.
double PoissonTail(double mean, int n);

// Clamps a probability to [0, 1]; corrections larger than 1e-9 are logged.
double ClampProbability(double p);

}  // namespace d2dcache

#endif  // D2DCACHE_PROBABILITY_H_
