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

#ifndef PRUNEKIT_ORACLE_H_
#define PRUNEKIT_ORACLE_H_

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>

#include "prunekit/objectives.h"

namespace prunekit {

struct OracleStats {
  // Evaluations of sets not previously seen by this oracle.
  std::uint64_t queries = 0;
  // Requests answered from the memo.
  std::uint64_t cache_hits = 0;
};

// Value oracle with query accounting. With memoization enabled (the default)
// each distinct set is evaluated at most once; memo keys are the canonical
// sorted id list, packed into a 64-bit mask when n <= 64. Thread-safe: values
// are always correct under concurrent use and stats are exact totals once
// all callers have returned.
class Oracle {
 public:
  explicit Oracle(const SetFunction& f, bool memoize = true);

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  double Value(std::span<const Element> set);
  // f(set ∪ {e}) - f(set); throws ConfigError if e is in `set`.
  double Marginal(Element e, std::span<const Element> set);

  OracleStats stats() const;
  const SetFunction& function() const { return f_; }
  std::size_t size() const { return f_.size(); }
  double tolerance() const { return f_.tolerance(); }

 private:
  bool Lookup(const ElementSet& canonical, double* value);
  void Store(const ElementSet& canonical, double value);

  const SetFunction& f_;
  const bool memoize_;
  mutable std::mutex mu_;
  OracleStats stats_;
  std::unordered_map<std::uint64_t, double> mask_memo_;
  std::unordered_map<std::string, double> list_memo_;
};

}  // namespace prunekit

#endif  // PRUNEKIT_ORACLE_H_
