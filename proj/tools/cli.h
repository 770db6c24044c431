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

#ifndef PRUNEKIT_TOOLS_CLI_H_
#define PRUNEKIT_TOOLS_CLI_H_

#include <iosfwd>

namespace prunekit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kGuardExceeded = 3;
inline constexpr int kParseError = 4;

// Runs the command line. Reports go to `out` unless --out names a file;
// errors are written to `err` as one JSON record.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace prunekit::cli

#endif  // PRUNEKIT_TOOLS_CLI_H_
