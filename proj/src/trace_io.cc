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

#include "d2dcache/trace_io.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace d2dcache {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    const size_t comma = line.find(',', pos);
    fields.push_back(Trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

template <typename T>
T ParseNumber(std::string_view field, int line_no) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("trace line " + std::to_string(line_no) + ": bad value '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string ContactTraceToCsv(const ContactTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "a,b,start_s,end_s\n";
  for (const Contact& c : trace.records()) {
    out << c.a << ',' << c.b << ',' << c.start_s << ',' << c.end_s << '\n';
  }
  return out.str();
}

ContactTrace ContactTraceFromCsv(std::string_view text,
                                 std::optional<double> horizon_s) {
  std::vector<Contact> records;
  int line_no = 0;
  bool header_seen = false;
  double latest = 0.0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "a,b,start_s,end_s") {
        throw ParseError("trace header must be 'a,b,start_s,end_s'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = SplitFields(line);
    if (fields.size() != 4) {
      throw ParseError("trace line " + std::to_string(line_no) +
                       ": expected 4 fields");
    }
    Contact c{ParseNumber<int>(fields[0], line_no),
              ParseNumber<int>(fields[1], line_no),
              ParseNumber<double>(fields[2], line_no),
              ParseNumber<double>(fields[3], line_no)};
    latest = std::max(latest, c.end_s);
    records.push_back(c);
  }
  if (!header_seen) throw ParseError("trace file is empty");
  try {
    return ContactTrace(std::move(records), horizon_s.value_or(latest));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid trace: ") + e.what());
  }
}

}  // namespace d2dcache
