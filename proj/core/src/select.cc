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

#include "prunekit/select.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

// Remaining candidates, kept in ascending id order so the first strict
// improvement wins ties.
class CandidatePool {
 public:
  explicit CandidatePool(const ElementSet& pool) : live_(pool) {}

  bool empty() const { return live_.empty(); }
  std::size_t size() const { return live_.size(); }
  std::span<const Element> items() const { return live_; }
  void Remove(Element e) {
    live_.erase(std::lower_bound(live_.begin(), live_.end(), e));
  }

 private:
  ElementSet live_;
};

}  // namespace

GreedyRun Greedy(Oracle& oracle, std::span<const Element> pool,
                 std::size_t size, GreedyOptions options) {
  GreedyRun run;
  run.pool = Canonical(pool);
  const std::size_t target = std::min(size, run.pool.size());
  if (target == 0) return run;
  CandidatePool candidates(run.pool);
  ElementSet current;  // canonical copy of picks
  double current_value = oracle.Value(current);
  while (run.picks.size() < target) {
    Element best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (Element e : candidates.items()) {
      ElementSet with = current;
      with.insert(std::lower_bound(with.begin(), with.end(), e), e);
      const double gain = oracle.Value(with) - current_value;
      if (gain > best_gain) {
        best_gain = gain;
        best = e;
      }
    }
    if (options.stop_at_zero && best_gain <= 0.0) break;
    candidates.Remove(best);
    current.insert(std::lower_bound(current.begin(), current.end(), best),
                   best);
    current_value = oracle.Value(current);
    run.picks.push_back(best);
    run.gains.push_back(best_gain);
  }
  return run;
}

GreedyRun ThresholdGreedy(Oracle& oracle, std::span<const Element> pool,
                          std::size_t size, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw ConfigError("threshold greedy: eta must lie in (0, 1)");
  }
  GreedyRun run;
  run.pool = Canonical(pool);
  if (size == 0 || run.pool.empty()) return run;

  ElementSet current;
  double current_value = oracle.Value(current);
  double top = 0.0;
  for (Element e : run.pool) {
    top = std::max(top, oracle.Value(ElementSet{e}) - current_value);
  }
  if (top <= 0.0) return run;

  const double floor = eta / static_cast<double>(run.pool.size()) * top;
  CandidatePool candidates(run.pool);
  for (double tau = top; tau >= floor && run.picks.size() < size;
       tau *= 1.0 - eta) {
    ElementSet sweep(candidates.items().begin(), candidates.items().end());
    for (Element e : sweep) {
      if (run.picks.size() >= size) break;
      ElementSet with = current;
      with.insert(std::lower_bound(with.begin(), with.end(), e), e);
      const double with_value = oracle.Value(with);
      const double gain = with_value - current_value;
      if (gain >= tau) {
        candidates.Remove(e);
        current = std::move(with);
        current_value = with_value;
        run.picks.push_back(e);
        run.gains.push_back(gain);
      }
    }
  }
  return run;
}

DensityRun DensityGreedy(Oracle& oracle, std::span<const Element> pool,
                         std::span<const double> costs, double stop_cost,
                         double keep_cap) {
  if (stop_cost > keep_cap) {
    throw ConfigError("density greedy: stop cost exceeds keep cap");
  }
  DensityRun run;
  run.pool = Canonical(pool);
  for (Element e : run.pool) {
    if (e < 0 || static_cast<std::size_t>(e) >= costs.size()) {
      throw ConfigError("density greedy: missing cost for element");
    }
    if (!(costs[e] > 0.0) || !std::isfinite(costs[e])) {
      throw ConfigError("density greedy: costs must be positive and finite");
    }
  }
  CandidatePool candidates(run.pool);
  ElementSet current;
  double current_value = oracle.Value(current);
  while (run.accepted_cost < stop_cost && !candidates.empty()) {
    Element best = -1;
    double best_density = -std::numeric_limits<double>::infinity();
    double best_gain = 0.0;
    for (Element e : candidates.items()) {
      ElementSet with = current;
      with.insert(std::lower_bound(with.begin(), with.end(), e), e);
      const double gain = oracle.Value(with) - current_value;
      const double density = gain / costs[e];
      if (density > best_density) {
        best_density = density;
        best_gain = gain;
        best = e;
      }
    }
    candidates.Remove(best);
    if (run.accepted_cost + costs[best] > keep_cap * (1.0 + kRealTolerance)) {
      run.skipped.push_back(best);
      continue;
    }
    current.insert(std::lower_bound(current.begin(), current.end(), best),
                   best);
    current_value = oracle.Value(current);
    run.accepted_cost += costs[best];
    run.picks.push_back(best);
    run.gains.push_back(best_gain);
    run.costs.push_back(costs[best]);
    run.densities.push_back(best_density);
  }
  if (run.accepted_cost < stop_cost) {
    run.dummy_cost = stop_cost - run.accepted_cost;
  }
  return run;
}

}  // namespace prunekit
