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

#include "d2dcache/mobility.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "d2dcache/parallel.h"
#include "d2dcache/random.h"

namespace d2dcache {
namespace {

constexpr int64_t kTrialsPerBlock = 4096;

struct RunningStats {
  int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void Add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }

  // Chan et al. pairwise merge.
  void Merge(const RunningStats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const int64_t total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * o.n / total;
    m2 += o.m2 + delta * delta * (static_cast<double>(n) * o.n / total);
    n = total;
  }

  McEstimate Estimate() const {
    McEstimate e;
    e.trials = n;
    e.mean = mean;
    if (n > 1) e.std_error = std::sqrt(std::max(0.0, m2 / (n - 1)) / n);
    return e;
  }
};

std::vector<int> ActiveFiles(const Placement& p) {
  std::vector<int> files;
  for (int f = 0; f < p.n_files(); ++f) {
    for (int j = 0; j < p.n_users(); ++j) {
      if (p(j, f) > 0) {
        files.push_back(f);
        break;
      }
    }
  }
  return files;
}

// min(u, K) / K for user i and file f given per-pair contact counts.
double CollectedFraction(const Scenario& s, const Placement& p,
                         const Matrix<int>& contacts, int i, int f) {
  const int k = s.threshold(f);
  long long u = p(i, f);
  for (int j = 0; j < s.n_users() && u < k; ++j) {
    if (j == i || p(j, f) == 0) continue;
    u += std::min<long long>(static_cast<long long>(s.budget(i, j)) *
                                 contacts(i, j),
                             p(j, f));
  }
  return static_cast<double>(std::min<long long>(u, k)) / k;
}

}  // namespace

ContactTrace::ContactTrace(std::vector<Contact> records, double horizon_s)
    : records_(std::move(records)), horizon_s_(horizon_s) {
  if (!(horizon_s_ >= 0.0) || !std::isfinite(horizon_s_)) {
    throw InvalidArgument("trace horizon must be finite and >= 0");
  }
  for (Contact& c : records_) {
    if (c.a == c.b) throw InvalidArgument("contact of a user with itself");
    if (c.a < 0 || c.b < 0) throw InvalidArgument("negative user index");
    if (c.a > c.b) std::swap(c.a, c.b);
    if (!(c.start_s >= 0.0) || !(c.start_s <= c.end_s) ||
        !(c.end_s <= horizon_s_)) {
      throw InvalidArgument("contact (" + std::to_string(c.a) + "," +
                            std::to_string(c.b) + ") at " +
                            std::to_string(c.start_s) +
                            " s lies outside [0, horizon] or ends before it "
                            "starts");
    }
  }
  std::stable_sort(records_.begin(), records_.end(),
                   [](const Contact& x, const Contact& y) {
                     if (x.start_s != y.start_s) return x.start_s < y.start_s;
                     if (x.a != y.a) return x.a < y.a;
                     return x.b < y.b;
                   });
}

McEstimate MonteCarloRatio(const Scenario& s, const Placement& p,
                           int64_t trials, uint64_t seed) {
  if (trials <= 0) throw InvalidArgument("Monte Carlo needs trials >= 1");
  RequireFeasible(p, s);
  const int n = s.n_users();
  const std::vector<int> files = ActiveFiles(p);
  const int64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<RunningStats> per_block(blocks);

  ParallelFor(blocks, [&](int64_t block) {
    Rng rng = MakeRng(seed, static_cast<uint64_t>(block));
    std::vector<std::poisson_distribution<int>> draws;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double mean = s.rates().finite(i, j) * s.deadline_s();
        if (mean > 0.0) {
          pairs.emplace_back(i, j);
          draws.emplace_back(mean);
        }
      }
    }
    Matrix<int> contacts(n, n, 0);
    RunningStats stats;
    const int64_t first = block * kTrialsPerBlock;
    const int64_t last = std::min(trials, first + kTrialsPerBlock);
    for (int64_t t = first; t < last; ++t) {
      for (size_t k = 0; k < pairs.size(); ++k) {
        const int m = draws[k](rng);
        contacts(pairs[k].first, pairs[k].second) = m;
        contacts(pairs[k].second, pairs[k].first) = m;
      }
      double value = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int f : files) {
          value += s.popularity(f) * CollectedFraction(s, p, contacts, i, f);
        }
      }
      stats.Add(value / n);
    }
    per_block[block] = stats;
  });

  RunningStats total;
  for (const RunningStats& b : per_block) total.Merge(b);
  return total.Estimate();
}

McEstimate ReplayRatio(const Placement& p, const ContactTrace& trace,
                       const Scenario& s, std::span<const double> epochs,
                       uint64_t seed) {
  RequireFeasible(p, s);
  if (epochs.empty()) throw InvalidArgument("replay needs at least one epoch");
  const double window = s.deadline_s();
  for (double t0 : epochs) {
    if (!(t0 >= 0.0) || t0 + window > trace.horizon_s()) {
      throw InvalidArgument("epoch window [" + std::to_string(t0) + ", " +
                            std::to_string(t0 + window) +
                            "] exceeds the trace horizon " +
                            std::to_string(trace.horizon_s()));
    }
  }
  const int n = s.n_users();
  for (const Contact& c : trace.records()) {
    if (c.b >= n) {
      throw InvalidArgument("trace mentions user " + std::to_string(c.b) +
                            " but the scenario has " + std::to_string(n));
    }
  }
  const auto& records = trace.records();
  std::vector<RunningStats> per_epoch(epochs.size());
  ParallelFor(static_cast<int64_t>(epochs.size()), [&](int64_t e) {
    const double t0 = epochs[e];
    Matrix<int> contacts(n, n, 0);
    auto it = std::lower_bound(
        records.begin(), records.end(), t0,
        [](const Contact& c, double t) { return c.start_s < t; });
    for (; it != records.end() && it->start_s <= t0 + window; ++it) {
      ++contacts(it->a, it->b);
      ++contacts(it->b, it->a);
    }
    Rng rng = MakeRng(seed, static_cast<uint64_t>(e));
    std::discrete_distribution<int> request(s.library().popularity().begin(),
                                            s.library().popularity().end());
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
      value += CollectedFraction(s, p, contacts, i, request(rng));
    }
    per_epoch[e].Add(value / n);
  });
  RunningStats total;
  for (const RunningStats& r : per_epoch) total.Merge(r);
  return total.Estimate();
}

std::vector<double> TiledEpochs(double horizon_s, double window_s) {
  if (!(window_s > 0.0)) throw InvalidArgument("window must be positive");
  std::vector<double> epochs;
  for (int64_t k = 0;; ++k) {
    const double t0 = k * window_s;
    if (t0 + window_s > horizon_s) break;
    epochs.push_back(t0);
  }
  return epochs;
}

RateMatrix EstimateRates(const ContactTrace& trace, int n_users) {
  if (!(trace.horizon_s() > 0.0)) {
    throw InvalidArgument("rate estimation needs a positive horizon");
  }
  Matrix<int64_t> counts(n_users, n_users, 0);
  for (const Contact& c : trace.records()) {
    if (c.b >= n_users) {
      throw InvalidArgument("trace mentions user " + std::to_string(c.b) +
                            " beyond n_users = " + std::to_string(n_users));
    }
    ++counts(c.a, c.b);
  }
  RateMatrix rates(n_users);
  for (int i = 0; i < n_users; ++i) {
    for (int j = i + 1; j < n_users; ++j) {
      rates.Set(i, j, static_cast<double>(counts(i, j)) / trace.horizon_s());
    }
  }
  return rates;
}

ContactTrace PoissonContactTrace(const RateMatrix& rates, double horizon_s,
                                 double contact_duration_s, uint64_t seed) {
  if (!(horizon_s > 0.0)) throw InvalidArgument("horizon must be positive");
  if (!(contact_duration_s >= 0.0)) {
    throw InvalidArgument("contact duration must be >= 0");
  }
  const int n = rates.size();
  std::vector<Contact> records;
  uint64_t stream = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++stream) {
      const double rate = rates.finite(i, j);
      if (rate <= 0.0) continue;
      Rng rng = MakeRng(seed, stream);
      std::exponential_distribution<double> gap(rate);
      for (double t = gap(rng); t <= horizon_s; t += gap(rng)) {
        records.push_back({i, j, t, std::min(t + contact_duration_s, horizon_s)});
      }
    }
  }
  return ContactTrace(std::move(records), horizon_s);
}

namespace {

struct Walker {
  double x = 0.0;
  double y = 0.0;
  double target_x = 0.0;
  double target_y = 0.0;
  double speed = 0.0;
  double average_velocity = 0.0;
};

class WaypointSampler {
 public:
  WaypointSampler(double side, Rng& rng) : side_(side), rng_(rng) {}

  void NewLeg(Walker& w) {
    std::uniform_real_distribution<double> coord(0.0, side_);
    w.target_x = coord(rng_);
    w.target_y = coord(rng_);
    w.speed = 0.0;
    if (w.average_velocity <= 0.0) return;
    // Open interval (0, 2 v_i): a zero speed would pin the walker forever.
    std::uniform_real_distribution<double> speed(0.0, 2.0 * w.average_velocity);
    while (w.speed <= 0.0) w.speed = speed(rng_);
  }

  void Advance(Walker& w, double dt) {
    if (w.speed <= 0.0) return;
    double left = dt;
    while (left > 0.0) {
      const double dx = w.target_x - w.x;
      const double dy = w.target_y - w.y;
      const double dist = std::hypot(dx, dy);
      const double reach = w.speed * left;
      if (reach < dist) {
        w.x += dx / dist * reach;
        w.y += dy / dist * reach;
        return;
      }
      w.x = w.target_x;
      w.y = w.target_y;
      left -= dist / w.speed;
      NewLeg(w);
    }
  }

 private:
  double side_;
  Rng& rng_;
};

}  // namespace

RwpTrace RwpGenerate(const RwpParams& params) {
  if (!(params.area_side_m > 0.0) || !(params.tx_range_m > 0.0) ||
      params.n_users < 1 || !(params.mean_velocity_mps >= 0.0) ||
      !(params.duration_s > 0.0)) {
    throw InvalidArgument("random waypoint parameters must be positive");
  }
  const bool fixed_velocity = !params.user_velocity_mps.empty();
  if (fixed_velocity) {
    if (static_cast<int>(params.user_velocity_mps.size()) != params.n_users) {
      throw InvalidArgument("one velocity per user is required");
    }
    for (double v : params.user_velocity_mps) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InvalidArgument("user velocities must be finite and >= 0");
      }
    }
  }
  const int n = params.n_users;
  Rng rng = MakeRng(params.seed, 0x727770ULL);
  WaypointSampler sampler(params.area_side_m, rng);
  std::uniform_real_distribution<double> coord(0.0, params.area_side_m);
  std::uniform_real_distribution<double> velocity(
      0.0, 2.0 * params.mean_velocity_mps);

  std::vector<Walker> walkers(n);
  RwpTrace out;
  out.user_velocity_mps.resize(n);
  double max_speed = 0.0;
  for (int i = 0; i < n; ++i) {
    Walker& w = walkers[i];
    w.x = coord(rng);
    w.y = coord(rng);
    if (fixed_velocity) {
      w.average_velocity = params.user_velocity_mps[i];
    } else {
      w.average_velocity =
          params.mean_velocity_mps > 0.0 ? velocity(rng) : 0.0;
    }
    out.user_velocity_mps[i] = w.average_velocity;
    max_speed = std::max(max_speed, 2.0 * w.average_velocity);
    sampler.NewLeg(w);
  }

  const double range2 = params.tx_range_m * params.tx_range_m;
  std::vector<double> open_since(static_cast<size_t>(n) * n, -1.0);
  std::vector<Contact> records;
  auto scan = [&](double t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dx = walkers[i].x - walkers[j].x;
        const double dy = walkers[i].y - walkers[j].y;
        double& since = open_since[static_cast<size_t>(i) * n + j];
        const bool in_range = dx * dx + dy * dy <= range2;
        if (in_range && since < 0.0) {
          since = t;
        } else if (!in_range && since >= 0.0) {
          records.push_back({i, j, since, t});
          since = -1.0;
        }
      }
    }
  };

  scan(0.0);
  if (max_speed > 0.0) {
    const double dt = params.tx_range_m / (10.0 * max_speed);
    const int64_t steps =
        static_cast<int64_t>(std::ceil(params.duration_s / dt));
    for (int64_t k = 1; k <= steps; ++k) {
      const double t = std::min(k * dt, params.duration_s);
      const double step = t - std::min((k - 1) * dt, params.duration_s);
      for (Walker& w : walkers) sampler.Advance(w, step);
      scan(t);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double since = open_since[static_cast<size_t>(i) * n + j];
      if (since >= 0.0) records.push_back({i, j, since, params.duration_s});
    }
  }
  out.trace = ContactTrace(std::move(records), params.duration_s);
  return out;
}

double NetworkContactRate(const ContactTrace& trace) {
  if (!(trace.horizon_s() > 0.0)) throw InvalidArgument("empty horizon");
  return static_cast<double>(trace.records().size()) / trace.horizon_s();
}

std::vector<double> UserContactRates(const ContactTrace& trace, int n_users) {
  if (!(trace.horizon_s() > 0.0)) throw InvalidArgument("empty horizon");
  std::vector<double> rates(n_users, 0.0);
  for (const Contact& c : trace.records()) {
    if (c.b >= n_users) throw InvalidArgument("user index beyond n_users");
    rates[c.a] += 1.0;
    rates[c.b] += 1.0;
  }
  for (double& r : rates) r /= trace.horizon_s();
  return rates;
}

}  // namespace d2dcache
