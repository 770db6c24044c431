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

#include "prunekit/errors.h"

#include <sstream>

namespace prunekit {
namespace {

std::string GuardMessage(double requested, double limit) {
  std::ostringstream os;
  os << "enumeration guard exceeded: " << requested
     << " subsets requested, limit " << limit;
  return os.str();
}

std::string ParseMessage(const std::string& source, std::size_t line,
                         const std::string& what) {
  std::ostringstream os;
  os << source;
  if (line > 0) os << ":" << line;
  os << ": " << what;
  return os.str();
}

}  // namespace

GuardExceeded::GuardExceeded(double requested, double limit)
    : std::runtime_error(GuardMessage(requested, limit)),
      requested_(requested),
      limit_(limit) {}

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(ParseMessage(source, line, what)),
      source_(source),
      line_(line) {}

}  // namespace prunekit
