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

#include "prunekit/exact.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

// Best set seen for one budget class. Sets arrive in lexicographic order, so
// on ties the first one is the lexicographically smallest.
class Bucket {
 public:
  Bucket(double tol, bool retain) : tol_(tol), retain_(retain) {}

  void Offer(double value, std::span<const Element> set) {
    if (!seen_ || value > value_ + Slack()) {
      seen_ = true;
      value_ = value;
      set_.assign(set.begin(), set.end());
      optima_.clear();
      truncated_ = false;
      if (retain_) optima_.push_back(set_);
    } else if (retain_ && std::abs(value - value_) <= Slack()) {
      if (optima_.size() < ExactOptions::kMaxOptima) {
        optima_.emplace_back(set.begin(), set.end());
      } else {
        truncated_ = true;
      }
    }
  }

  // Folds `other` in, preferring the lexicographically smaller set on ties.
  void Merge(const Bucket& other) {
    if (!other.seen_) return;
    if (!seen_ || other.value_ > value_ + Slack()) {
      *this = other;
      return;
    }
    if (std::abs(other.value_ - value_) <= Slack()) {
      if (other.set_ < set_) set_ = other.set_;
      for (const auto& s : other.optima_) {
        if (optima_.size() < ExactOptions::kMaxOptima) {
          optima_.push_back(s);
        } else {
          truncated_ = true;
        }
      }
      truncated_ = truncated_ || other.truncated_;
    }
  }

  bool seen() const { return seen_; }
  double value() const { return value_; }
  const ElementSet& set() const { return set_; }
  std::vector<ElementSet> optima() const {
    std::vector<ElementSet> out = optima_;
    std::sort(out.begin(), out.end());
    return out;
  }
  bool truncated() const { return truncated_; }

 private:
  double Slack() const { return tol_ * std::max(1.0, std::abs(value_)); }

  double tol_;
  bool retain_;
  bool seen_ = false;
  double value_ = 0.0;
  ElementSet set_;
  std::vector<ElementSet> optima_;
  bool truncated_ = false;
};

void Emit(OptProfile& profile, const Bucket& bucket, bool retain) {
  profile.opt.push_back(bucket.value());
  profile.argmax.push_back(bucket.set());
  if (retain) {
    profile.optima.push_back(bucket.optima());
    profile.optima_truncated = profile.optima_truncated || bucket.truncated();
  }
}

}  // namespace

double EnumerationGuard() {
  if (const char* env = std::getenv("PRUNEKIT_GUARD")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) return v;
  }
  return kDefaultEnumerationGuard;
}

double SubsetCount(std::size_t n, std::size_t k) {
  double total = 0.0;
  double term = 1.0;  // C(n, j)
  for (std::size_t j = 0; j <= std::min(n, k); ++j) {
    total += term;
    term = term * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  return total;
}

OptProfile OptCardinality(const SetFunction& f,
                          std::span<const Element> universe, std::size_t k,
                          const ExactOptions& options) {
  const ElementSet u = Canonical(universe);
  const std::size_t depth = std::min(k, u.size());
  const double count = SubsetCount(u.size(), depth);
  if (count > options.guard) throw GuardExceeded(count, options.guard);

  std::vector<Bucket> by_size(depth + 1,
                              Bucket(f.tolerance(), options.retain_all_optima));
  OptProfile profile;
  EnumerateSubsets(f, u, depth, [&](const Cursor& c) {
    ++profile.enumerated;
    by_size[c.elements().size()].Offer(c.value(), c.elements());
  });

  Bucket running(f.tolerance(), options.retain_all_optima);
  for (std::size_t b = 0; b <= k; ++b) {
    if (b <= depth) running.Merge(by_size[b]);
    profile.budgets.push_back(static_cast<double>(b));
    Emit(profile, running, options.retain_all_optima);
  }
  return profile;
}

OptProfile OptKnapsack(const SetFunction& f, std::span<const Element> universe,
                       std::span<const double> costs,
                       std::span<const double> budgets,
                       const ExactOptions& options) {
  const ElementSet u = Canonical(universe);
  for (Element e : u) {
    if (e < 0 || static_cast<std::size_t>(e) >= costs.size() ||
        !(costs[e] > 0.0)) {
      throw ConfigError("exact knapsack: every element needs a positive cost");
    }
  }
  if (budgets.empty()) return {};
  std::vector<std::size_t> order(budgets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return budgets[a] < budgets[b]; });
  std::vector<double> sorted;
  for (std::size_t i : order) sorted.push_back(budgets[i]);
  const double top = sorted.back();

  // Largest feasible cardinality bounds the enumeration.
  std::vector<double> unit;
  for (Element e : u) unit.push_back(costs[e]);
  std::sort(unit.begin(), unit.end());
  std::size_t max_items = 0;
  double running_cost = 0.0;
  for (double c : unit) {
    if (running_cost + c > top) break;
    running_cost += c;
    ++max_items;
  }
  const double count = SubsetCount(u.size(), max_items);
  if (count > options.guard) throw GuardExceeded(count, options.guard);

  // buckets[i] holds sets whose cost lies in (sorted[i-1], sorted[i]].
  std::vector<Bucket> buckets(sorted.size(),
                              Bucket(f.tolerance(), options.retain_all_optima));
  OptProfile profile;
  auto cursor = f.NewCursor();
  const auto visit = [&](double cost) {
    ++profile.enumerated;
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), cost) - sorted.begin());
    if (idx < sorted.size()) {
      buckets[idx].Offer(cursor->value(), cursor->elements());
    }
  };
  // Recursive DFS in lexicographic order, pruning over-budget branches.
  const auto dfs = [&](auto&& self, std::size_t start, double cost) -> void {
    for (std::size_t i = start; i < u.size(); ++i) {
      const double next = cost + costs[u[i]];
      if (next > top) continue;
      cursor->Push(u[i]);
      visit(next);
      self(self, i + 1, next);
      cursor->Pop();
    }
  };
  visit(0.0);
  dfs(dfs, 0, 0.0);

  std::vector<Bucket> prefix;
  Bucket running(f.tolerance(), options.retain_all_optima);
  for (const Bucket& b : buckets) {
    running.Merge(b);
    prefix.push_back(running);
  }
  profile.opt.resize(budgets.size());
  profile.argmax.resize(budgets.size());
  if (options.retain_all_optima) profile.optima.resize(budgets.size());
  profile.budgets.assign(budgets.begin(), budgets.end());
  for (std::size_t j = 0; j < order.size(); ++j) {
    const std::size_t i = order[j];
    profile.opt[i] = prefix[j].value();
    profile.argmax[i] = prefix[j].set();
    if (options.retain_all_optima) {
      profile.optima[i] = prefix[j].optima();
      profile.optima_truncated =
          profile.optima_truncated || prefix[j].truncated();
    }
  }
  return profile;
}

}  // namespace prunekit
