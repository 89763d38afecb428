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

#ifndef D2DCACHE_PARALLEL_H_
#define D2DCACHE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace d2dcache {

// Worker count from D2DCACHE_WORKERS, else the hardware concurrency (>= 1).
int WorkerCount();

// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are handed
// out dynamically; callers write results into per-index slots so the output
// never depends on the schedule. The first exception thrown by a body is
// rethrown after all workers stop.
void ParallelFor(int64_t n, const std::function<void(int64_t)>& body,
                 int workers = WorkerCount());

}  // namespace d2dcache

#endif  // D2DCACHE_PARALLEL_H_
