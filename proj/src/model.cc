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

#include "d2dcache/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "d2dcache/random.h"

namespace d2dcache {

RateMatrix::RateMatrix(int n_users) : values_(n_users, n_users, 0.0) {
  if (n_users < 1) throw InvalidArgument("rate matrix needs at least 1 user");
}

void RateMatrix::Set(int i, int j, double per_second) {
  if (i == j) throw InvalidArgument("self contact rate is fixed at infinity");
  values_(i, j) = per_second;
  values_(j, i) = per_second;
}

FileLibrary::FileLibrary(std::vector<double> popularity,
                         std::vector<int> thresholds)
    : popularity_(std::move(popularity)), thresholds_(std::move(thresholds)) {
  if (popularity_.empty()) throw InvalidArgument("file library is empty");
  if (popularity_.size() != thresholds_.size()) {
    throw InvalidArgument("popularity and threshold vectors differ in length");
  }
  double total = 0.0;
  for (size_t f = 0; f < popularity_.size(); ++f) {
    if (!(popularity_[f] >= 0.0) || !std::isfinite(popularity_[f])) {
      throw InvalidArgument("popularity of file " + std::to_string(f) +
                            " is not a non-negative number");
    }
    if (thresholds_[f] < 1) {
      throw InvalidArgument("recovery threshold of file " + std::to_string(f) +
                            " must be >= 1");
    }
    total += popularity_[f];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgument("popularity sums to " + std::to_string(total) +
                          ", expected 1");
  }
  max_threshold_ = *std::max_element(thresholds_.begin(), thresholds_.end());
}

Scenario::Scenario(RateMatrix rates, Matrix<int> budgets, double deadline_s,
                   int capacity, FileLibrary library)
    : rates_(std::move(rates)),
      budgets_(std::move(budgets)),
      deadline_s_(deadline_s),
      capacity_(capacity),
      library_(std::move(library)) {
  const int n = rates_.size();
  if (n < 1) throw InvalidArgument("scenario needs at least one user");
  if (library_.n_files() < 1) throw InvalidArgument("scenario has no files");
  if (budgets_.rows() != n || budgets_.cols() != n) {
    throw InvalidArgument("budget matrix must be n_users x n_users");
  }
  if (!(deadline_s_ > 0.0) || !std::isfinite(deadline_s_)) {
    throw InvalidArgument("deadline must be a positive number of seconds");
  }
  if (capacity_ < 1) throw InvalidArgument("capacity must be >= 1 segment");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (budgets_(i, j) < 1) {
        throw InvalidArgument("budget[" + std::to_string(i) + "][" +
                              std::to_string(j) +
                              "] must be >= 1 segment per contact");
      }
      if (i == j) continue;
      const double r = rates_.finite(i, j);
      if (!(r >= 0.0) || !std::isfinite(r)) {
        throw InvalidArgument("rate[" + std::to_string(i) + "][" +
                              std::to_string(j) +
                              "] must be finite and non-negative");
      }
      if (r != rates_.finite(j, i)) {
        throw InvalidArgument("rate matrix is not symmetric");
      }
    }
  }
}

Scenario Scenario::WithRates(RateMatrix rates) const {
  return Scenario(std::move(rates), budgets_, deadline_s_, capacity_,
                  library_);
}

int Placement::UserTotal(int j) const {
  const auto row = counts_.row(j);
  return std::accumulate(row.begin(), row.end(), 0);
}

std::vector<double> ZipfPopularity(int n_files, double gamma_r) {
  if (n_files < 1) throw InvalidArgument("zipf popularity needs n_files >= 1");
  if (!(gamma_r >= 0.0)) throw InvalidArgument("zipf exponent must be >= 0");
  std::vector<double> p(n_files);
  for (int f = 0; f < n_files; ++f) p[f] = std::pow(f + 1.0, -gamma_r);
  // Sum smallest terms first.
  double total = 0.0;
  for (int f = n_files - 1; f >= 0; --f) total += p[f];
  for (double& v : p) v /= total;
  return p;
}

RateMatrix SampleGammaRates(int n_users, double shape, double scale,
                            uint64_t seed) {
  if (n_users < 2) throw InvalidArgument("gamma rates need n_users >= 2");
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw InvalidArgument("gamma shape and scale must be positive");
  }
  Rng rng = MakeRng(seed, 0x7261746573ULL);
  std::gamma_distribution<double> gamma(shape, scale);
  RateMatrix rates(n_users);
  for (int i = 0; i < n_users; ++i) {
    for (int j = i + 1; j < n_users; ++j) rates.Set(i, j, gamma(rng));
  }
  return rates;
}

std::vector<int> UniformThresholds(int n_files, int k_max, uint64_t seed) {
  if (n_files < 1) throw InvalidArgument("need n_files >= 1");
  if (k_max < 1) throw InvalidArgument("k_max must be >= 1");
  Rng rng = MakeRng(seed, 0x6b6d6178ULL);
  std::uniform_int_distribution<int> pick(1, k_max);
  std::vector<int> k(n_files);
  for (int& v : k) v = pick(rng);
  return k;
}

int DeriveBudget(const LinkParams& link) {
  if (!(link.contact_duration_s > 0.0) || !(link.rate_bps > 0.0) ||
      !(link.segment_bits > 0.0)) {
    throw InvalidArgument("link parameters must be positive");
  }
  return static_cast<int>(
      std::floor(link.contact_duration_s * link.rate_bps / link.segment_bits));
}

std::vector<Violation> ValidatePlacement(const Placement& p,
                                         const Scenario& s) {
  if (p.n_users() != s.n_users() || p.n_files() != s.n_files()) {
    throw InvalidArgument("placement is " + std::to_string(p.n_users()) + "x" +
                          std::to_string(p.n_files()) + ", scenario is " +
                          std::to_string(s.n_users()) + "x" +
                          std::to_string(s.n_files()));
  }
  std::vector<Violation> violations;
  for (int j = 0; j < p.n_users(); ++j) {
    long long total = 0;
    for (int f = 0; f < p.n_files(); ++f) {
      const int x = p(j, f);
      total += x;
      if (x < 0) {
        violations.push_back({Constraint::kInteger, j, f, x, 0});
      } else if (x > s.threshold(f)) {
        violations.push_back({Constraint::kThreshold, j, f, x, s.threshold(f)});
      }
    }
    if (total > s.capacity()) {
      violations.push_back({Constraint::kCapacity, j, -1, total, s.capacity()});
    }
  }
  return violations;
}

void RequireFeasible(const Placement& p, const Scenario& s) {
  auto violations = ValidatePlacement(p, s);
  if (!violations.empty()) throw ConstraintViolation(std::move(violations));
}

Scenario GenerateScenario(const ScenarioConfig& c) {
  if (c.n_users < 1) throw InvalidArgument("need at least one user");
  if (c.budget < 1) throw InvalidArgument("budget must be >= 1");
  RateMatrix rates = c.n_users >= 2
                         ? SampleGammaRates(c.n_users, c.rate_shape,
                                            c.rate_scale, c.seed)
                         : RateMatrix(1);
  FileLibrary library(ZipfPopularity(c.n_files, c.gamma_r),
                      UniformThresholds(c.n_files, c.k_max, c.seed));
  return Scenario(std::move(rates), Matrix<int>(c.n_users, c.n_users, c.budget),
                  c.deadline_s, c.capacity, std::move(library));
}

}  // namespace d2dcache
