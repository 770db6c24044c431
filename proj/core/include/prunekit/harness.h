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

// Containment evaluation and the experiment drivers built on it.

#ifndef PRUNEKIT_HARNESS_H_
#define PRUNEKIT_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prunekit/exact.h"
#include "prunekit/instances.h"
#include "prunekit/knapsack.h"
#include "prunekit/objectives.h"
#include "prunekit/oracle.h"
#include "prunekit/prune.h"

namespace prunekit {

enum class ReferenceMode {
  kExact,   // exhaustive OPT over N
  kGreedy,  // best greedy prefix over N; alpha may exceed 1
};

std::string_view ReferenceName(ReferenceMode mode);
ReferenceMode ParseReference(std::string_view name);

// Per-budget denominators: values[i] is the reference value at budgets[i].
struct ReferenceProfile {
  ReferenceMode mode = ReferenceMode::kExact;
  std::vector<double> budgets;
  std::vector<double> values;
};

// Cardinality reference for k' = 1..k. Exact mode throws GuardExceeded when
// the enumeration over N is too large.
ReferenceProfile CardinalityReference(const SetFunction& f, std::size_t k,
                                      ReferenceMode mode,
                                      double guard = EnumerationGuard());

struct ContainmentReport {
  ReferenceMode reference = ReferenceMode::kExact;
  std::vector<double> budgets;  // k' = 1..k, or the B' grid
  std::vector<double> alpha;
  std::vector<double> reference_values;
  std::vector<double> best_inside;
  std::vector<ElementSet> best_inside_sets;
  // False when best-inside fell back to greedy over P.
  bool inside_exact = true;
  // Set when some alpha exceeds 1, which only a greedy reference allows.
  bool alpha_above_one = false;

  OracleStats prune_stats;
  double prune_seconds = 0.0;
  OracleStats extraction_stats;
  double extraction_seconds = 0.0;

  // alpha at the largest budget, or 1 when there are no budgets.
  double alpha_top() const;
  double alpha_min() const;
};

// alpha = inside / reference, or 1 when the reference is <= 0.
double ContainmentRatio(double inside, double reference);

// Containment of P for every k' = 1..k. In exact mode both N and P must fit
// the guard (GuardExceeded otherwise); in greedy mode best-inside uses
// enumeration when P fits and greedy over P when it does not. A precomputed
// reference may be passed to avoid recomputing it.
ContainmentReport EvaluateContainment(
    const SetFunction& f, std::span<const Element> pruned, std::size_t k,
    ReferenceMode mode, const ReferenceProfile* reference = nullptr,
    double guard = EnumerationGuard());

// As above, copying prune resources from `pruned`.
ContainmentReport EvaluateContainment(
    const SetFunction& f, const PrunedSet& pruned, std::size_t k,
    ReferenceMode mode, const ReferenceProfile* reference = nullptr,
    double guard = EnumerationGuard());

// Knapsack containment for each B' in `budgets`: best-inside is the value of
// ExtractBudget, the reference is exact OPT_{B'} or density greedy over N.
ContainmentReport EvaluateKnapsackContainment(
    const SetFunction& f, const KnapsackPrunedSet& pruned,
    const KnapsackInstance& instance, std::span<const double> budgets,
    ReferenceMode mode, double guard = EnumerationGuard());

// --- Sweeps ------------------------------------------------------------------

struct SweepInstance {
  std::string id;
  GenSpec gen;
};

struct SweepConfig {
  std::vector<SweepInstance> instances;
  std::vector<Algorithm> algorithms;
  std::vector<double> omegas;
  // Each seed drives both instance generation and the pruner's RNG.
  std::vector<std::uint64_t> seeds;
  std::size_t k = 5;
  // Passed to the pruners when positive.
  double epsilon = 0.0;
  ReferenceMode reference = ReferenceMode::kExact;
  std::size_t jobs = 1;

  // Throws ConfigError when any axis is empty or k = 0.
  void Validate() const;
};

struct SweepRow {
  std::string instance_id;
  std::string family;
  Algorithm algorithm = Algorithm::kSeqDisjoint;
  double omega = 1.0;
  std::uint64_t seed = 0;
  PruneParams params;
  ElementSet pruned;
  std::optional<ContainmentReport> report;
  std::string error;  // empty on success
};

struct SweepCell {
  std::string instance_id;
  std::string family;
  Algorithm algorithm = Algorithm::kSeqDisjoint;
  double omega = 1.0;
  std::size_t rows = 0;
  std::size_t errors = 0;
  // Statistics of alpha at k over the successful rows (sample std).
  double mean_alpha = 0.0;
  double std_alpha = 0.0;
  double min_alpha = 0.0;
  double mean_pruned_size = 0.0;
  double mean_queries = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;    // instance, seed, algorithm, omega order
  std::vector<SweepCell> cells;  // instance, algorithm, omega order
};

// Runs every (instance, seed, algorithm, omega) cell. Cells run on `jobs`
// threads; results are merged by cell key so the output does not depend on
// scheduling. Per-cell errors are recorded in the row.
SweepResult Sweep(const SweepConfig& config);

// --- Separation study ----------------------------------------------------------

enum class SeparationExtraction {
  kExact,   // best subset of size <= k inside P
  kGreedy,  // greedy of size k over P
};

struct SeparationConfig {
  std::size_t n = 20;
  std::size_t universe = 30;
  std::size_t k = 3;
  std::size_t omega = 2;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
  InterferenceParams params;
  SeparationExtraction extraction = SeparationExtraction::kExact;
  // Greedy runs used for extraction and the greedy-k check stop at the
  // first non-positive gain.
  bool extract_stop_at_zero = false;
};

struct SeparationResult {
  std::size_t trials = 0;
  // OPT_k ⊆ P using the lexicographically smallest optimal set.
  std::size_t greedy_contain = 0;
  std::size_t sdg_contain = 0;
  // Some optimal set of OPT_k ⊆ P.
  std::size_t greedy_contain_any = 0;
  std::size_t sdg_contain_any = 0;
  // Extracted value strictly higher for SDG / for greedy.
  std::size_t sdg_value_wins = 0;
  std::size_t greedy_value_wins = 0;
  // Largest (f(Q_sdg) - f(Q_greedy)) / OPT_k.
  double max_gap = 0.0;
  // Greedy of size k over N falls short of OPT_k.
  std::size_t greedy_k_suboptimal = 0;
  double mean_alpha_greedy = 0.0;
  double mean_alpha_sdg = 0.0;

  double rate(std::size_t count) const {
    return trials == 0 ? 0.0
                       : static_cast<double>(count) / static_cast<double>(trials);
  }
};

// Interference-coverage separation instances: P_g is one greedy run of
// omega * k steps and P_s is SDG with omega runs of size k, so both have
// the same budget. Trial i uses a seed derived from (config.seed, i).
SeparationResult SeparationStudy(const SeparationConfig& config);

// --- Statistics --------------------------------------------------------------

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double mean = 0.0;
};

// Percentile 2.5 / 97.5 bootstrap interval of the mean of `diffs`.
// Throws ConfigError on empty input or zero resamples.
ConfidenceInterval PairedBootstrap(std::span<const double> diffs,
                                   std::size_t resamples = 10000,
                                   std::uint64_t seed = 42);

// --- Speedup probe -------------------------------------------------------------

struct SpeedupResult {
  double t_full = 0.0;
  double t_pruned = 0.0;
  double ratio = 0.0;
  double alpha = 0.0;
  double subsets_full = 0.0;
  double subsets_pruned = 0.0;
  // The full-set enumeration exceeded the guard and the ratio uses the
  // subset-count estimate scaled by the measured per-subset time.
  bool guard_limited = false;
};

// Times OptCardinality on P and on N (median of three repeats, each
// repeated until it takes at least `min_seconds`) and reports the ratio and
// alpha(k) of P.
SpeedupResult SpeedupProbe(const SetFunction& f, std::span<const Element> pruned,
                           std::size_t k, double min_seconds = 2e-3,
                           double guard = EnumerationGuard());

}  // namespace prunekit

#endif  // PRUNEKIT_HARNESS_H_
