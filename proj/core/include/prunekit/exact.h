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

// Brute-force optimum oracles. These are the denominators of every
// containment ratio and the independent check for every guarantee, so they
// share no code with the selection engines beyond the objective cursors.

#ifndef PRUNEKIT_EXACT_H_
#define PRUNEKIT_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prunekit/objectives.h"

namespace prunekit {

inline constexpr double kDefaultEnumerationGuard = 1e8;

// The subset-count limit: PRUNEKIT_GUARD from the environment if set and
// positive, kDefaultEnumerationGuard otherwise.
double EnumerationGuard();

// sum_{j <= k} C(n, j), in floating point.
double SubsetCount(std::size_t n, std::size_t k);

struct ExactOptions {
  double guard = EnumerationGuard();
  // Also collect every optimal set per budget (up to kMaxOptima each).
  bool retain_all_optima = false;

  static constexpr std::size_t kMaxOptima = 4096;
};

struct OptProfile {
  // Cardinality: budgets[i] = i for i = 0..k. Knapsack: the requested B'
  // values in the order given.
  std::vector<double> budgets;
  std::vector<double> opt;
  // Lexicographically smallest optimal set per budget.
  std::vector<ElementSet> argmax;
  // Filled only with ExactOptions::retain_all_optima.
  std::vector<std::vector<ElementSet>> optima;
  bool optima_truncated = false;
  std::uint64_t enumerated = 0;
};

// OPT_{k'} = max_{T ⊆ universe, |T| <= k'} f(T) for every k' = 0..k, in one
// enumeration sweep. Throws GuardExceeded when SubsetCount(|universe|, k)
// exceeds options.guard.
OptProfile OptCardinality(const SetFunction& f,
                          std::span<const Element> universe, std::size_t k,
                          const ExactOptions& options = {});

// OPT_{B'} = max over T ⊆ universe with c(T) <= B' for every requested
// budget, in one sweep. `costs` is indexed by element id and must be
// positive. Throws GuardExceeded when the feasible-size bound exceeds the
// guard.
OptProfile OptKnapsack(const SetFunction& f, std::span<const Element> universe,
                       std::span<const double> costs,
                       std::span<const double> budgets,
                       const ExactOptions& options = {});

}  // namespace prunekit

#endif  // PRUNEKIT_EXACT_H_
