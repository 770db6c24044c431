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

// Knapsack-constraint pruning: sequential disjoint density greedy against a
// master budget B, and per-budget extraction for any B' in (0, B] from the
// same pruned set.

#ifndef PRUNEKIT_KNAPSACK_H_
#define PRUNEKIT_KNAPSACK_H_

#include <cstddef>
#include <span>
#include <vector>

#include "prunekit/objectives.h"
#include "prunekit/oracle.h"
#include "prunekit/select.h"

namespace prunekit {

struct KnapsackInstance {
  std::vector<double> costs;  // indexed by element id
  double budget = 0.0;        // master budget B

  // Throws ConfigError unless B > 0 and 0 < cost <= B for every element.
  void Validate() const;
  double Cost(std::span<const Element> set) const;
};

struct KnapsackPrunedSet {
  ElementSet elements;
  std::vector<DensityRun> runs;
  double total_cost = 0.0;
  double budget = 0.0;
  std::size_t ell = 0;
  OracleStats stats;
  double elapsed_seconds = 0.0;
};

// `ell` density-greedy runs on shrinking pools, each stopping at cost 2B and
// keeping picks only while the run stays within 3B.
KnapsackPrunedSet PruneSdgDensity(Oracle& oracle,
                                  const KnapsackInstance& instance,
                                  std::size_t ell);

struct ExtractOptions {
  // Exact enumeration over P is used when |P| is at most this.
  std::size_t exhaustive_cap = 22;
};

// Best feasible Q ⊆ P with c(Q) <= B'. Combines exact enumeration (when P is
// small enough), density greedy over P with stop = keep = B', and the best
// affordable singleton. Throws ConfigError unless 0 < B' <= B.
ElementSet ExtractBudget(const KnapsackPrunedSet& pruned, Oracle& oracle,
                         const KnapsackInstance& instance, double budget_prime,
                         ExtractOptions options = {});

// Eight log-spaced budgets in (lo_fraction * B, B], ascending, last = B.
std::vector<double> BudgetGridLog(double budget, std::size_t points = 8,
                                  double lo_fraction = 0.1);

}  // namespace prunekit

#endif  // PRUNEKIT_KNAPSACK_H_
