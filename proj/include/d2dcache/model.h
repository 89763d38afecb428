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

// Problem-instance types for mobility-aware D2D caching: the user population
// with its pairwise contact rates and per-contact segment budgets, the file
// library, and the cache placement matrix x[j][f].

#ifndef D2DCACHE_MODEL_H_
#define D2DCACHE_MODEL_H_

#include <cstdint>
#include <vector>

#include "d2dcache/error.h"
#include "d2dcache/matrix.h"

namespace d2dcache {

// Pairwise contact rate in contacts per second. A user always reaches its own
// cache, which is modelled as an explicit infinite rate instead of a large
// float so that probability code can branch on it.
struct Rate {
  double per_second = 0.0;
  bool infinite = false;

  static Rate Infinite() { return Rate{0.0, true}; }
  static Rate Finite(double per_second) { return Rate{per_second, false}; }
};

// Symmetric n x n contact-rate matrix whose diagonal is the infinite marker.
class RateMatrix {
 public:
  RateMatrix() = default;
  explicit RateMatrix(int n_users);

  int size() const { return values_.rows(); }

  Rate at(int i, int j) const {
    return i == j ? Rate::Infinite() : Rate::Finite(values_(i, j));
  }
  // Off-diagonal rate; 0 on the diagonal.
  double finite(int i, int j) const { return i == j ? 0.0 : values_(i, j); }

  // Sets both (i, j) and (j, i). i != j.
  void Set(int i, int j, double per_second);

  bool operator==(const RateMatrix&) const = default;

 private:
  Matrix<double> values_;
};

class FileLibrary {
 public:
  FileLibrary() = default;
  // Throws InvalidArgument unless popularity is a probability vector (sum 1
  // within 1e-12) and every threshold is >= 1.
  FileLibrary(std::vector<double> popularity, std::vector<int> thresholds);

  int n_files() const { return static_cast<int>(popularity_.size()); }
  double popularity(int f) const { return popularity_[f]; }
  int threshold(int f) const { return thresholds_[f]; }
  int max_threshold() const { return max_threshold_; }
  const std::vector<double>& popularity() const { return popularity_; }
  const std::vector<int>& thresholds() const { return thresholds_; }

 private:
  std::vector<double> popularity_;
  std::vector<int> thresholds_;
  int max_threshold_ = 0;
};

class Scenario {
 public:
  // Validates every invariant; throws InvalidArgument on failure. Budgets of
  // zero segments per contact are rejected.
  Scenario(RateMatrix rates, Matrix<int> budgets, double deadline_s,
           int capacity, FileLibrary library);

  int n_users() const { return rates_.size(); }
  int n_files() const { return library_.n_files(); }
  const RateMatrix& rates() const { return rates_; }
  Rate rate(int i, int j) const { return rates_.at(i, j); }
  const Matrix<int>& budgets() const { return budgets_; }
  int budget(int i, int j) const { return budgets_(i, j); }
  double deadline_s() const { return deadline_s_; }
  int capacity() const { return capacity_; }
  const FileLibrary& library() const { return library_; }
  double popularity(int f) const { return library_.popularity(f); }
  int threshold(int f) const { return library_.threshold(f); }

  Scenario WithRates(RateMatrix rates) const;

 private:
  RateMatrix rates_;
  Matrix<int> budgets_;
  double deadline_s_;
  int capacity_;
  FileLibrary library_;
};

// Segment counts x[j][f] cached at user j for file f.
class Placement {
 public:
  Placement() = default;
  Placement(int n_users, int n_files) : counts_(n_users, n_files, 0) {}
  explicit Placement(Matrix<int> counts) : counts_(std::move(counts)) {}
  static Placement Empty(const Scenario& s) {
    return Placement(s.n_users(), s.n_files());
  }

  int n_users() const { return counts_.rows(); }
  int n_files() const { return counts_.cols(); }
  int& operator()(int j, int f) { return counts_(j, f); }
  int operator()(int j, int f) const { return counts_(j, f); }
  const Matrix<int>& counts() const { return counts_; }
  int UserTotal(int j) const;

  bool operator==(const Placement&) const = default;

 private:
  Matrix<int> counts_;
};

struct LinkParams {
  double contact_duration_s;
  double rate_bps;
  double segment_bits;
};

// p_f proportional to f^-gamma_r over f = 1..n_files.
std::vector<double> ZipfPopularity(int n_files, double gamma_r);

// Off-diagonal pairs i < j drawn i.i.d. Gamma(shape, scale) in row-major
// order and mirrored.
RateMatrix SampleGammaRates(int n_users, double shape, double scale,
                            uint64_t seed);

// Uniform integers in [1, k_max].
std::vector<int> UniformThresholds(int n_files, int k_max, uint64_t seed);

// floor(t_c * r / s). Zero means the link cannot carry a segment per contact;
// callers must reject it.
int DeriveBudget(const LinkParams& link);

// Every violated constraint, in (user, file) order. Empty means feasible.
// Throws InvalidArgument on dimension mismatch.
std::vector<Violation> ValidatePlacement(const Placement& p,
                                         const Scenario& s);

// Throws ConstraintViolation if ValidatePlacement reports anything.
void RequireFeasible(const Placement& p, const Scenario& s);

// Knobs for synthetic scenario generation.
struct ScenarioConfig {
  int n_users = 5;
  int n_files = 20;
  double gamma_r = 0.6;
  int k_max = 3;
  int capacity = 3;
  double deadline_s = 120.0;
  double rate_shape = 4.43;
  double rate_scale = 1.0 / 1088.0;
  int budget = 1;
  uint64_t seed = 1;
};

Scenario GenerateScenario(const ScenarioConfig& config);

}  // namespace d2dcache

#endif  // D2DCACHE_MODEL_H_
