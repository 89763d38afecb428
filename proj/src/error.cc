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

#include "d2dcache/error.h"

#include <sstream>

namespace d2dcache {

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

std::string ToString(const Violation& v) {
  std::ostringstream out;
  switch (v.constraint) {
    case Constraint::kCapacity:
      out << "capacity: user " << v.user << " stores " << v.value
          << " segments, capacity is " << v.limit;
      break;
    case Constraint::kInteger:
      out << "integrality: user " << v.user << " file " << v.file
          << " has negative count " << v.value;
      break;
    case Constraint::kThreshold:
      out << "threshold: user " << v.user << " file " << v.file << " stores "
          << v.value << " segments, recovery threshold is " << v.limit;
      break;
  }
  return out.str();
}

namespace {

std::string Describe(const std::vector<Violation>& violations) {
  std::string message = "placement violates " +
                        std::to_string(violations.size()) + " constraint(s)";
  for (const Violation& v : violations) message += "\n  " + ToString(v);
  return message;
}

}  // namespace

ConstraintViolation::ConstraintViolation(std::vector<Violation> violations)
    : Error(ErrorCode::kConstraintViolation, Describe(violations)),
      violations_(std::move(violations)) {}

}  // namespace d2dcache
