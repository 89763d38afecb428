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

#ifndef D2DCACHE_BASELINES_H_
#define D2DCACHE_BASELINES_H_

#include <cstdint>

#include "d2dcache/model.h"

namespace d2dcache {

// Every user fills its cache with the most popular files, min(K_f, remaining)
// segments each, in descending popularity (ties to the smaller index).
Placement PopularPlace(const Scenario& s);

// Each user draws C unit segments, each from the files that still have room
// (x_jf < K_f) with probability proportional to p_f. A user stops early once
// no file has room. Users draw from independent streams derived from `seed`.
Placement RandomPlace(const Scenario& s, uint64_t seed);

}  // namespace d2dcache

#endif  // D2DCACHE_BASELINES_H_
