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

// Cardinality-constraint pruners. Each returns a pruned universe P together
// with the structure that produced it, so that the same P can later be
// searched for every budget k' <= k.

#ifndef PRUNEKIT_PRUNE_H_
#define PRUNEKIT_PRUNE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prunekit/objectives.h"
#include "prunekit/oracle.h"
#include "prunekit/select.h"

namespace prunekit {

enum class Algorithm {
  kSeqDisjoint,
  kWindowMax,
  kWindowRand,
  kThresholdStream,
  kStdGreedy,
  kRandom,
  kFastBudgetRange,
};

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the names returned by AlgorithmName; throws ConfigError otherwise.
Algorithm ParseAlgorithm(std::string_view name);
std::span<const Algorithm> AllAlgorithms();

enum class WindowPick { kRandom, kArgmax };

struct PruneParams {
  std::size_t k = 0;
  // Pruning budget; 0 means floor(omega * k).
  std::size_t p = 0;
  double omega = 1.0;
  // Accuracy; when positive and `ell` is 0, ell = ceil(1 / epsilon).
  double epsilon = 0.0;
  std::size_t ell = 0;
  std::uint64_t seed = 0;
  // Stream order for the threshold baseline; natural id order when false.
  bool shuffle_stream = false;

  std::size_t budget() const;
  // Disjoint-run count: explicit ell, else ceil(1/epsilon), else
  // ceil(budget / k).
  std::size_t runs() const;
  // Throws ConfigError on invalid combinations.
  void Validate() const;
};

struct FlatStructure {};

struct DisjointRuns {
  std::vector<GreedyRun> runs;
};

struct WindowTrace {
  WindowPick pick = WindowPick::kRandom;
  std::size_t window_size = 0;
  std::vector<Element> committed;  // S_k in commit order
  std::vector<ElementSet> windows;  // W_0 .. W_{k-1}
};

struct ThresholdGrid {
  double epsilon = 0.0;
  double eta = 0.0;
  std::vector<std::size_t> budgets;  // ascending grid of budgets q
  std::vector<GreedyRun> runs;        // runs[i] = S_q for q = budgets[i]
};

using PruneStructure =
    std::variant<FlatStructure, DisjointRuns, WindowTrace, ThresholdGrid>;

struct PrunedSet {
  std::string algorithm;
  PruneParams params;
  ElementSet elements;
  PruneStructure structure;
  // Declared upper bound on |elements| for the producing algorithm.
  std::size_t cap = 0;
  // Oracle work done by this invocation.
  OracleStats stats;
  double elapsed_seconds = 0.0;
};

// Sequential disjoint greedy: `ell` greedy runs of size k, each on the
// ground set minus earlier runs. If n < ell * k, returns P = N without
// running. When `cap` is set, the total number of picks is limited to it and
// the final run is truncated.
PrunedSet PruneSeqDisjoint(Oracle& oracle, std::size_t k, std::size_t ell,
                           std::optional<std::size_t> cap = std::nullopt);

// Window containment: k rounds, each retaining the top-min(floor(omega*k),
// remaining) elements by marginal gain and committing one of them, either
// uniformly at random (seeded) or the argmax. P = committed ∪ all windows.
PrunedSet PruneWindow(Oracle& oracle, std::size_t k, double omega,
                      WindowPick pick, std::uint64_t seed);

// One greedy run of min(p, n) steps.
PrunedSet PruneStdGreedy(Oracle& oracle, std::size_t p);

// Threshold greedy at every budget of the grid returned by BudgetGrid.
// Assumes a monotone objective. Throws ConfigError unless 0 < epsilon < 1/2.
PrunedSet PruneFastBudgetRange(Oracle& oracle, std::size_t k, double epsilon);

// {1..min(k, ceil(1/eta))} ∪ {min(k, ceil((1+eta)^j)) : j = 0..ceil(log_{1+eta} k)},
// ascending and deduplicated.
std::vector<std::size_t> BudgetGrid(std::size_t k, double eta);

// Exact-size witness for budget k' from a fast budget-range pruned set: the
// run of the smallest grid budget q >= k' if it already has at most k'
// elements, otherwise the best of ceil(4/epsilon) uniformly random
// k'-subsets of it. Throws ConfigError if k' exceeds the largest budget or
// `pruned` does not carry a threshold grid.
ElementSet Witness(const PrunedSet& pruned, Oracle& oracle,
                   std::size_t k_prime, std::uint64_t seed);

// Single-pass streaming threshold baseline (reconstruction, monotone only):
// accept e when |P| < p, f(e | P) > 0 and f(e | P) >= epsilon * d / k, where
// d is the running best singleton value.
PrunedSet PruneThresholdStream(Oracle& oracle, std::span<const Element> order,
                               std::size_t k, std::size_t p, double epsilon);

// Uniform random min(p, n)-subset.
PrunedSet PruneRandom(std::size_t n, std::size_t p, std::uint64_t seed);

// Dispatches on `algorithm` with budget p = params.budget().
PrunedSet Prune(Algorithm algorithm, Oracle& oracle, const PruneParams& params);

}  // namespace prunekit

#endif  // PRUNEKIT_PRUNE_H_
