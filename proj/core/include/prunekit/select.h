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

// Greedy selection engines shared by the pruners. All of them break ties
// toward the lowest element id, so identical inputs give identical runs.

#ifndef PRUNEKIT_SELECT_H_
#define PRUNEKIT_SELECT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "prunekit/objectives.h"
#include "prunekit/oracle.h"

namespace prunekit {

struct GreedyRun {
  ElementSet pool;            // canonical candidate pool
  std::vector<Element> picks;  // selection order
  std::vector<double> gains;   // gains[i] = f(picks[i] | picks[0..i))
};

struct DensityRun {
  ElementSet pool;
  std::vector<Element> picks;
  std::vector<double> gains;
  std::vector<double> costs;      // cost of each pick
  std::vector<double> densities;  // gains[i] / costs[i] at pick time
  std::vector<Element> skipped;   // rejected by the keep cap
  double accepted_cost = 0.0;
  // Virtual zero-value padding that tops the run up to its stop cost.
  double dummy_cost = 0.0;
};

struct GreedyOptions {
  // Stop as soon as the best marginal gain is <= 0. Off by default: the
  // disjoint-run analysis needs runs of exactly min(size, |pool|) picks.
  bool stop_at_zero = false;
};

// Standard greedy: appends the argmax-marginal element until
// min(size, |pool|) picks are made.
GreedyRun Greedy(Oracle& oracle, std::span<const Element> pool,
                 std::size_t size, GreedyOptions options = {});

// Decreasing-threshold greedy for monotone objectives. The threshold starts
// at the best singleton gain d and shrinks by (1 - eta) per sweep until it
// falls below (eta / |pool|) * d or `size` picks are made.
// Throws ConfigError unless 0 < eta < 1.
GreedyRun ThresholdGreedy(Oracle& oracle, std::span<const Element> pool,
                          std::size_t size, double eta);

// Density greedy for knapsack constraints. Repeatedly takes the remaining
// element with the best gain / cost ratio; it is accepted when the running
// cost stays within `keep_cap` and discarded for good otherwise. Stops once
// the accepted cost reaches `stop_cost` or the pool is exhausted, in which
// case the shortfall is recorded as dummy cost. `costs` is indexed by
// element id. Throws ConfigError on non-positive costs or
// stop_cost > keep_cap.
DensityRun DensityGreedy(Oracle& oracle, std::span<const Element> pool,
                         std::span<const double> costs, double stop_cost,
                         double keep_cap);

}  // namespace prunekit

#endif  // PRUNEKIT_SELECT_H_
