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

#include "prunekit/knapsack.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "prunekit/errors.h"
#include "prunekit/exact.h"

namespace prunekit {
namespace {

ElementSet Without(std::size_t n, std::span<const Element> used) {
  ElementSet out;
  for (Element e = 0; e < static_cast<Element>(n); ++e) {
    if (!std::binary_search(used.begin(), used.end(), e)) out.push_back(e);
  }
  return out;
}

}  // namespace

void KnapsackInstance::Validate() const {
  if (!(budget > 0.0) || !std::isfinite(budget)) {
    throw ConfigError("knapsack: budget must be positive");
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (!(costs[i] > 0.0) || costs[i] > budget) {
      std::ostringstream os;
      os << "knapsack: cost of element " << i << " is " << costs[i]
         << ", must lie in (0, B = " << budget << "]";
      throw ConfigError(os.str());
    }
  }
}

double KnapsackInstance::Cost(std::span<const Element> set) const {
  double total = 0.0;
  for (Element e : set) total += costs.at(static_cast<std::size_t>(e));
  return total;
}

KnapsackPrunedSet PruneSdgDensity(Oracle& oracle,
                                  const KnapsackInstance& instance,
                                  std::size_t ell) {
  instance.Validate();
  if (instance.costs.size() != oracle.size()) {
    throw ConfigError("knapsack: cost vector does not match ground set");
  }
  if (ell < 1) throw ConfigError("knapsack: ell must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const OracleStats before = oracle.stats();

  KnapsackPrunedSet out;
  out.budget = instance.budget;
  out.ell = ell;
  const double b = instance.budget;
  for (std::size_t i = 0; i < ell; ++i) {
    const ElementSet pool = Without(oracle.size(), out.elements);
    DensityRun run = DensityGreedy(oracle, pool, instance.costs, 2.0 * b,
                                   3.0 * b);
    out.elements = Union(out.elements, Canonical(run.picks));
    out.total_cost += run.accepted_cost;
    out.runs.push_back(std::move(run));
  }
  const OracleStats after = oracle.stats();
  out.stats.queries = after.queries - before.queries;
  out.stats.cache_hits = after.cache_hits - before.cache_hits;
  out.elapsed_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return out;
}

ElementSet ExtractBudget(const KnapsackPrunedSet& pruned, Oracle& oracle,
                         const KnapsackInstance& instance, double budget_prime,
                         ExtractOptions options) {
  if (!(budget_prime > 0.0) ||
      budget_prime > instance.budget * (1.0 + kRealTolerance)) {
    throw ConfigError("extract: B' must lie in (0, B]");
  }
  ElementSet best;
  double best_value = oracle.Value(best);
  const auto consider = [&](ElementSet candidate) {
    if (instance.Cost(candidate) > budget_prime) return;
    const double v = oracle.Value(candidate);
    if (v > best_value) {
      best_value = v;
      best = std::move(candidate);
    }
  };

  if (pruned.elements.size() <= options.exhaustive_cap) {
    const std::vector<double> budgets = {budget_prime};
    try {
      const OptProfile profile = OptKnapsack(
          oracle.function(), pruned.elements, instance.costs, budgets);
      consider(profile.argmax.front());
    } catch (const GuardExceeded&) {
      // Fall through to the greedy candidates.
    }
  }
  DensityRun run = DensityGreedy(oracle, pruned.elements, instance.costs,
                                 budget_prime, budget_prime);
  consider(Canonical(run.picks));
  for (Element e : pruned.elements) {
    if (instance.costs[e] <= budget_prime) consider(ElementSet{e});
  }
  return best;
}

std::vector<double> BudgetGridLog(double budget, std::size_t points,
                                  double lo_fraction) {
  if (points == 0) return {};
  if (!(lo_fraction > 0.0 && lo_fraction < 1.0)) {
    throw ConfigError("budget grid: lower fraction must lie in (0, 1)");
  }
  std::vector<double> grid;
  for (std::size_t i = 1; i <= points; ++i) {
    const double exponent =
        static_cast<double>(points - i) / static_cast<double>(points);
    grid.push_back(budget * std::pow(lo_fraction, exponent));
  }
  grid.back() = budget;
  return grid;
}

}  // namespace prunekit
