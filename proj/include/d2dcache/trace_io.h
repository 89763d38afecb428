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

// Contact-trace CSV: header "a,b,start_s,end_s", one undirected contact per
// row with a < b.

#ifndef D2DCACHE_TRACE_IO_H_
#define D2DCACHE_TRACE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "d2dcache/mobility.h"

namespace d2dcache {

std::string ContactTraceToCsv(const ContactTrace& trace);

// The horizon defaults to the latest end time in the file. Throws ParseError
// on malformed rows.
ContactTrace ContactTraceFromCsv(std::string_view text,
                                 std::optional<double> horizon_s = {});

}  // namespace d2dcache

#endif  // D2DCACHE_TRACE_IO_H_
