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

// Empirical checks of a placement: Monte Carlo under the Poisson contact
// model, replay against recorded contacts, contact-rate estimation, and
// synthetic contact traces (random waypoint motion or Poisson processes).

#ifndef D2DCACHE_MOBILITY_H_
#define D2DCACHE_MOBILITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "d2dcache/model.h"

namespace d2dcache {

// One contact between users a < b over [start_s, end_s].
struct Contact {
  int a = 0;
  int b = 0;
  double start_s = 0.0;
  double end_s = 0.0;

  bool operator==(const Contact&) const = default;
};

class ContactTrace {
 public:
  ContactTrace() = default;
  // Orients every pair as a < b and sorts by (start, a, b). Throws
  // InvalidArgument for self contacts, negative users, or times outside
  // [0, horizon].
  ContactTrace(std::vector<Contact> records, double horizon_s);

  const std::vector<Contact>& records() const { return records_; }
  double horizon_s() const { return horizon_s_; }
  bool empty() const { return records_.empty(); }

 private:
  std::vector<Contact> records_;
  double horizon_s_ = 0.0;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int64_t trials = 0;
};

// Samples M_ij ~ Poisson(lambda_ij T) per trial (one draw per unordered pair)
// and averages sum_f p_f min(u_if, K_f) / K_f over users. Trials are grouped
// in fixed blocks, each with its own generator derived from (seed, block).
McEstimate MonteCarloRatio(const Scenario& s, const Placement& p,
                           int64_t trials, uint64_t seed);

// For each epoch t0 and user i: draws a file f ~ p, counts contacts of (i, j)
// starting in [t0, t0 + T], and scores min(u_if, K_f) / K_f. One trial per
// epoch (the user average). Throws InvalidArgument if an epoch window leaves
// the trace horizon or no epochs are given.
McEstimate ReplayRatio(const Placement& p, const ContactTrace& trace,
                       const Scenario& s, std::span<const double> epochs,
                       uint64_t seed);

// Back-to-back windows t0 = 0, T, 2T, ... that fit inside the horizon.
std::vector<double> TiledEpochs(double horizon_s, double window_s);

// lambda_ij = (#contacts of i and j) / horizon.
RateMatrix EstimateRates(const ContactTrace& trace, int n_users);

// Independent Poisson contact processes per pair over [0, horizon]; each
// contact lasts contact_duration_s (clipped at the horizon).
ContactTrace PoissonContactTrace(const RateMatrix& rates, double horizon_s,
                                 double contact_duration_s, uint64_t seed);

struct RwpParams {
  double area_side_m = 300.0;
  double tx_range_m = 30.0;
  int n_users = 20;
  double mean_velocity_mps = 3.0;
  double duration_s = 3600.0;
  uint64_t seed = 1;
  // Fixed per-user average velocities; drawn from (0, 2 * mean_velocity_mps)
  // when empty.
  std::vector<double> user_velocity_mps;
};

struct RwpTrace {
  ContactTrace trace;
  // Per-user average velocity, uniform in (0, 2 * mean_velocity_mps).
  std::vector<double> user_velocity_mps;
};

// Random waypoint motion without pauses: each leg picks a uniform target in
// the square and a speed uniform in (0, 2 v_i). Positions advance on a fixed
// step of tx_range / (10 * max speed); a contact opens when a pair comes
// within range and closes when it separates.
RwpTrace RwpGenerate(const RwpParams& params);

// Contacts per second over the whole network, and per user.
double NetworkContactRate(const ContactTrace& trace);
std::vector<double> UserContactRates(const ContactTrace& trace, int n_users);

}  // namespace d2dcache

#endif  // D2DCACHE_MOBILITY_H_
