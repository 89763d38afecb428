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

// Exact evaluation of the data offloading ratio.
//
// User i collects V_j = min(B_ij * M_ij, x_jf) segments of file f from user j
// within the deadline, where M_ij ~ Poisson(lambda_ij * T) and V_i = x_if.
// The ratio averages E[min(sum_j V_j, K_f)] / K_f over requests and users.
// The distribution of sum_j V_j is built one user at a time by convolving
// cumulative tables, which keeps the cost quadratic in the number of users.

#ifndef D2DCACHE_OBJECTIVE_H_
#define D2DCACHE_OBJECTIVE_H_

#include <span>
#include <vector>

#include "d2dcache/matrix.h"
#include "d2dcache/model.h"

namespace d2dcache {

// Distribution of V = min(B * M, x): mass[z] = Pr[V = z] for z in [0, x].
struct SegmentPmf {
  int support_max = 0;
  std::vector<double> mass;
};

// Throws InvalidArgument for a negative rate, a non-positive budget or a
// negative cached count.
SegmentPmf MakeSegmentPmf(Rate rate, double deadline_s, int budget, int cached);

// P(J, k) = Pr[V_1 + ... + V_J <= k] for J = 0..|pmfs| and k = 0..k_prime.
class SumCdfTable {
 public:
  SumCdfTable(int n_vars, int k_prime) : table_(n_vars + 1, k_prime + 1, 0.0) {}

  int n_vars() const { return table_.rows() - 1; }
  int k_prime() const { return table_.cols() - 1; }
  double at(int j, int k) const { return table_(j, k); }
  double& at(int j, int k) { return table_(j, k); }
  // Pr[sum of all variables <= k].
  double final_cdf(int k) const { return table_(n_vars(), k); }

 private:
  Matrix<double> table_;
};

SumCdfTable SumCdf(std::span<const SegmentPmf> pmfs, int k_prime);

// Only the last row of SumCdf, computed with two rolling rows. Returns
// k_prime + 1 entries.
std::vector<double> SumCdfFinalRow(std::span<const SegmentPmf> pmfs,
                                   int k_prime);

// Contribution U_f of file f to the ratio given the cached counts
// column[j] = x_jf. Throws InvalidArgument if the column has the wrong size
// or an entry outside [0, K_f].
double FileUtility(const Scenario& s, int f, std::span<const int> column);

// Sum of FileUtility over all files. Throws ConstraintViolation for an
// infeasible placement.
double OffloadingRatio(const Scenario& s, const Placement& p);

}  // namespace d2dcache

#endif  // D2DCACHE_OBJECTIVE_H_
