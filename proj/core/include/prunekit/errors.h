// Copyright 2026 The Prunekit Authors
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

#ifndef PRUNEKIT_ERRORS_H_
#define PRUNEKIT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prunekit {

// Invalid arguments or parameter combinations. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force enumeration would exceed the configured subset budget.
// Maps to CLI exit code 3.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(double requested, double limit);

  double requested() const { return requested_; }
  double limit() const { return limit_; }

 private:
  double requested_;
  double limit_;
};

// Malformed input file. `line` is 1-based, or 0 when the error is not tied
// to a particular line. Maps to CLI exit code 4.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace prunekit

#endif  // PRUNEKIT_ERRORS_H_
