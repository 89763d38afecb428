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

#ifndef D2DCACHE_ERROR_H_
#define D2DCACHE_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace d2dcache {

enum class ErrorCode {
  kInvalidArgument,
  kResourceLimit,
  kConstraintViolation,
  kParse,
};

// Base for every error raised by the library. The code lets front ends map
// failures to exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCode::kInvalidArgument, message) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& message)
      : Error(ErrorCode::kResourceLimit, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::kParse, message) {}
};

// Which placement inequality a violation breaks.
enum class Constraint {
  kCapacity,   // sum_f x[j][f] <= C
  kInteger,    // x[j][f] is a non-negative integer
  kThreshold,  // x[j][f] <= K_f
};

struct Violation {
  Constraint constraint;
  int user;
  int file;  // -1 for capacity violations, which are per user.
  long long value;
  long long limit;

  bool operator==(const Violation&) const = default;
};

std::string ToString(const Violation& v);

class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace d2dcache

#endif  // D2DCACHE_ERROR_H_
