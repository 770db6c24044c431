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

#include "prunekit/prune.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

constexpr double kDefaultStreamEpsilon = 0.1;
constexpr double kDefaultGridEpsilon = 0.2;

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames = {{
    {Algorithm::kSeqDisjoint, "seq_disjoint"},
    {Algorithm::kWindowMax, "window_max"},
    {Algorithm::kWindowRand, "window_rand"},
    {Algorithm::kThresholdStream, "quick_prune"},
    {Algorithm::kStdGreedy, "std_greedy"},
    {Algorithm::kRandom, "random"},
    {Algorithm::kFastBudgetRange, "fast_budget_range"},
}};

constexpr std::array<Algorithm, 7> kAll = {
    Algorithm::kSeqDisjoint,  Algorithm::kWindowMax,
    Algorithm::kWindowRand,   Algorithm::kThresholdStream,
    Algorithm::kStdGreedy,    Algorithm::kRandom,
    Algorithm::kFastBudgetRange};

// Records wall time and the oracle work done between construction and
// Finish().
class Meter {
 public:
  explicit Meter(const Oracle* oracle)
      : oracle_(oracle),
        before_(oracle ? oracle->stats() : OracleStats{}),
        start_(std::chrono::steady_clock::now()) {}

  void Finish(PrunedSet& out) const {
    out.elapsed_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
    if (oracle_ != nullptr) {
      const OracleStats after = oracle_->stats();
      out.stats.queries = after.queries - before_.queries;
      out.stats.cache_hits = after.cache_hits - before_.cache_hits;
    }
  }

 private:
  const Oracle* oracle_;
  OracleStats before_;
  std::chrono::steady_clock::time_point start_;
};

ElementSet Remaining(std::size_t n, std::span<const Element> used) {
  ElementSet out;
  out.reserve(n);
  std::size_t j = 0;
  for (Element e = 0; e < static_cast<Element>(n); ++e) {
    while (j < used.size() && used[j] < e) ++j;
    if (j < used.size() && used[j] == e) continue;
    out.push_back(e);
  }
  return out;
}

std::size_t WindowSize(std::size_t k, double omega) {
  const double w = std::floor(omega * static_cast<double>(k) + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(w));
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::span<const Algorithm> AllAlgorithms() { return kAll; }

std::size_t PruneParams::budget() const {
  if (p > 0) return p;
  return static_cast<std::size_t>(
      std::floor(omega * static_cast<double>(k) + 1e-9));
}

std::size_t PruneParams::runs() const {
  if (ell > 0) return ell;
  if (epsilon > 0.0) return static_cast<std::size_t>(std::ceil(1.0 / epsilon - 1e-12));
  if (k == 0) return 1;
  return std::max<std::size_t>(1, (budget() + k - 1) / k);
}

void PruneParams::Validate() const {
  if (!(omega >= 1.0) || !std::isfinite(omega)) {
    throw ConfigError("omega must be >= 1");
  }
  if (epsilon != 0.0 && !(epsilon > 0.0 && epsilon < 0.5)) {
    throw ConfigError("epsilon must lie in (0, 1/2)");
  }
  if (k > 0 && budget() < k) {
    throw ConfigError("pruning budget p must be at least k");
  }
}

PrunedSet PruneSeqDisjoint(Oracle& oracle, std::size_t k, std::size_t ell,
                           std::optional<std::size_t> cap) {
  if (ell < 1) throw ConfigError("seq_disjoint: ell must be >= 1");
  Meter meter(&oracle);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(Algorithm::kSeqDisjoint));
  out.params.k = k;
  out.params.ell = ell;
  out.params.p = cap.value_or(ell * k);
  out.cap = std::min(ell * k, cap.value_or(ell * k));
  DisjointRuns structure;
  const std::size_t n = oracle.size();
  if (k == 0) {
    // Vacuous budget.
  } else if (n < out.cap) {
    out.elements = FullSet(n);
  } else {
    ElementSet used;
    std::size_t remaining_budget = out.cap;
    for (std::size_t i = 0; i < ell && remaining_budget > 0; ++i) {
      const std::size_t size = std::min(k, remaining_budget);
      GreedyRun run = Greedy(oracle, Remaining(n, used), size);
      used = Union(used, Canonical(run.picks));
      remaining_budget -= run.picks.size();
      structure.runs.push_back(std::move(run));
    }
    out.elements = std::move(used);
  }
  out.structure = std::move(structure);
  meter.Finish(out);
  return out;
}

PrunedSet PruneWindow(Oracle& oracle, std::size_t k, double omega,
                      WindowPick pick, std::uint64_t seed) {
  if (!(omega >= 1.0)) throw ConfigError("window: omega must be >= 1");
  Meter meter(&oracle);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(
      pick == WindowPick::kArgmax ? Algorithm::kWindowMax
                                  : Algorithm::kWindowRand));
  out.params.k = k;
  out.params.omega = omega;
  out.params.seed = seed;
  const std::size_t n = oracle.size();
  WindowTrace trace;
  trace.pick = pick;
  trace.window_size = k == 0 ? 0 : WindowSize(k, omega);
  out.params.p = k + trace.window_size * k;
  out.cap = out.params.p;

  std::mt19937_64 rng(seed);
  ElementSet committed;  // canonical S_t
  ElementSet accumulated;
  for (std::size_t t = 0; t < k; ++t) {
    const ElementSet rest = Remaining(n, committed);
    if (rest.empty()) break;
    const double base = oracle.Value(committed);
    std::vector<std::pair<double, Element>> ranked;
    ranked.reserve(rest.size());
    for (Element e : rest) {
      ElementSet with = committed;
      with.insert(std::lower_bound(with.begin(), with.end(), e), e);
      ranked.emplace_back(oracle.Value(with) - base, e);
    }
    const std::size_t width = std::min(trace.window_size, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + width, ranked.end(),
                      [](const auto& x, const auto& y) {
                        if (x.first != y.first) return x.first > y.first;
                        return x.second < y.second;
                      });
    ElementSet window;
    window.reserve(width);
    for (std::size_t i = 0; i < width; ++i) window.push_back(ranked[i].second);
    std::size_t chosen = 0;
    if (pick == WindowPick::kRandom) {
      chosen = std::uniform_int_distribution<std::size_t>(0, width - 1)(rng);
    }
    const Element w = window[chosen];
    std::sort(window.begin(), window.end());
    accumulated = Union(accumulated, window);
    committed.insert(std::lower_bound(committed.begin(), committed.end(), w),
                     w);
    trace.committed.push_back(w);
    trace.windows.push_back(std::move(window));
  }
  out.elements = Union(accumulated, committed);
  out.structure = std::move(trace);
  meter.Finish(out);
  return out;
}

PrunedSet PruneStdGreedy(Oracle& oracle, std::size_t p) {
  Meter meter(&oracle);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(Algorithm::kStdGreedy));
  out.params.p = p;
  out.cap = p;
  GreedyRun run = Greedy(oracle, FullSet(oracle.size()), p);
  out.elements = Canonical(run.picks);
  DisjointRuns structure;
  structure.runs.push_back(std::move(run));
  out.structure = std::move(structure);
  meter.Finish(out);
  return out;
}

std::vector<std::size_t> BudgetGrid(std::size_t k, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw ConfigError("budget grid: eta must lie in (0, 1)");
  }
  std::vector<std::size_t> grid;
  if (k == 0) return grid;
  const auto small = static_cast<std::size_t>(std::ceil(1.0 / eta - 1e-12));
  for (std::size_t q = 1; q <= std::min(k, small); ++q) grid.push_back(q);
  const auto steps = static_cast<std::size_t>(std::ceil(
      std::log(static_cast<double>(k)) / std::log1p(eta) - 1e-12));
  for (std::size_t j = 0; j <= steps; ++j) {
    const double power = std::pow(1.0 + eta, static_cast<double>(j));
    const auto q = static_cast<std::size_t>(std::ceil(power - 1e-9));
    grid.push_back(std::min(k, q));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PrunedSet PruneFastBudgetRange(Oracle& oracle, std::size_t k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ConfigError("fast_budget_range: epsilon must lie in (0, 1/2)");
  }
  Meter meter(&oracle);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(Algorithm::kFastBudgetRange));
  out.params.k = k;
  out.params.epsilon = epsilon;
  ThresholdGrid grid;
  grid.epsilon = epsilon;
  grid.eta = epsilon / 4.0;
  grid.budgets = BudgetGrid(k, grid.eta);
  const ElementSet ground = FullSet(oracle.size());
  ElementSet united;
  for (std::size_t q : grid.budgets) {
    GreedyRun run = ThresholdGreedy(oracle, ground, q, grid.eta);
    united = Union(united, Canonical(run.picks));
    grid.runs.push_back(std::move(run));
    out.cap += q;
  }
  out.params.p = out.cap;
  out.elements = std::move(united);
  out.structure = std::move(grid);
  meter.Finish(out);
  return out;
}

ElementSet Witness(const PrunedSet& pruned, Oracle& oracle,
                   std::size_t k_prime, std::uint64_t seed) {
  const auto* grid = std::get_if<ThresholdGrid>(&pruned.structure);
  if (grid == nullptr) {
    throw ConfigError("witness: pruned set has no threshold grid");
  }
  if (k_prime == 0) return {};
  auto it = std::lower_bound(grid->budgets.begin(), grid->budgets.end(),
                             k_prime);
  if (it == grid->budgets.end()) {
    throw ConfigError("witness: k' exceeds the largest pruned budget");
  }
  const GreedyRun& run = grid->runs[it - grid->budgets.begin()];
  if (run.picks.size() <= k_prime) return Canonical(run.picks);

  const auto retries =
      static_cast<std::size_t>(std::ceil(4.0 / grid->epsilon - 1e-12));
  std::mt19937_64 rng(seed);
  std::vector<Element> source(run.picks);
  ElementSet best;
  double best_value = 0.0;
  for (std::size_t r = 0; r < retries; ++r) {
    // Partial Fisher-Yates for a uniform k'-subset.
    for (std::size_t i = 0; i < k_prime; ++i) {
      std::uniform_int_distribution<std::size_t> d(i, source.size() - 1);
      std::swap(source[i], source[d(rng)]);
    }
    ElementSet sample = Canonical(std::span(source).first(k_prime));
    const double v = oracle.Value(sample);
    if (best.empty() || v > best_value) {
      best_value = v;
      best = std::move(sample);
    }
  }
  return best;
}

PrunedSet PruneThresholdStream(Oracle& oracle, std::span<const Element> order,
                               std::size_t k, std::size_t p, double epsilon) {
  const std::size_t n = oracle.size();
  {
    ElementSet check = Canonical(order);
    if (order.size() != n || check != FullSet(n)) {
      throw ConfigError("threshold stream: order must be a permutation of N");
    }
  }
  if (!(epsilon > 0.0)) throw ConfigError("threshold stream: epsilon must be > 0");
  Meter meter(&oracle);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(Algorithm::kThresholdStream));
  out.params.k = k;
  out.params.p = p;
  out.params.epsilon = epsilon;
  out.cap = p;
  out.structure = FlatStructure{};
  if (k > 0 && p > 0) {
    const double empty = oracle.Value(ElementSet{});
    double best_single = 0.0;
    ElementSet kept;
    double kept_value = empty;
    for (Element e : order) {
      if (kept.size() >= p) break;
      best_single = std::max(best_single, oracle.Value(ElementSet{e}) - empty);
      ElementSet with = kept;
      with.insert(std::lower_bound(with.begin(), with.end(), e), e);
      const double with_value = oracle.Value(with);
      const double gain = with_value - kept_value;
      if (gain > 0.0 && gain >= epsilon * best_single / static_cast<double>(k)) {
        kept = std::move(with);
        kept_value = with_value;
      }
    }
    out.elements = std::move(kept);
  }
  meter.Finish(out);
  return out;
}

PrunedSet PruneRandom(std::size_t n, std::size_t p, std::uint64_t seed) {
  Meter meter(nullptr);
  PrunedSet out;
  out.algorithm = std::string(AlgorithmName(Algorithm::kRandom));
  out.params.p = p;
  out.params.seed = seed;
  out.cap = p;
  out.structure = FlatStructure{};
  std::vector<Element> all = FullSet(n);
  std::mt19937_64 rng(seed);
  const std::size_t take = std::min(p, n);
  for (std::size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, n - 1);
    std::swap(all[i], all[d(rng)]);
  }
  all.resize(take);
  out.elements = Canonical(all);
  meter.Finish(out);
  return out;
}

PrunedSet Prune(Algorithm algorithm, Oracle& oracle,
                const PruneParams& params) {
  params.Validate();
  const std::size_t k = params.k;
  const std::size_t p = params.budget();
  PrunedSet out;
  switch (algorithm) {
    case Algorithm::kSeqDisjoint:
      if (params.ell > 0 || params.epsilon > 0.0) {
        out = PruneSeqDisjoint(oracle, k, params.runs());
      } else {
        out = PruneSeqDisjoint(oracle, k, params.runs(), p);
      }
      break;
    case Algorithm::kWindowMax:
      out = PruneWindow(oracle, k, params.omega, WindowPick::kArgmax,
                        params.seed);
      break;
    case Algorithm::kWindowRand:
      out = PruneWindow(oracle, k, params.omega, WindowPick::kRandom,
                        params.seed);
      break;
    case Algorithm::kThresholdStream: {
      std::vector<Element> order = FullSet(oracle.size());
      if (params.shuffle_stream) {
        std::mt19937_64 rng(params.seed);
        std::shuffle(order.begin(), order.end(), rng);
      }
      out = PruneThresholdStream(
          oracle, order, k, p,
          params.epsilon > 0.0 ? params.epsilon : kDefaultStreamEpsilon);
      break;
    }
    case Algorithm::kStdGreedy:
      out = PruneStdGreedy(oracle, k == 0 ? 0 : p);
      break;
    case Algorithm::kRandom:
      out = PruneRandom(oracle.size(), k == 0 ? 0 : p, params.seed);
      break;
    case Algorithm::kFastBudgetRange:
      out = PruneFastBudgetRange(
          oracle, k,
          params.epsilon > 0.0 ? params.epsilon : kDefaultGridEpsilon);
      break;
  }
  // Echo the caller's parameters alongside the values each pruner resolved.
  PruneParams echoed = params;
  echoed.p = out.params.p;
  if (out.params.ell > 0) echoed.ell = out.params.ell;
  if (out.params.epsilon > 0.0) echoed.epsilon = out.params.epsilon;
  out.params = echoed;
  return out;
}

}  // namespace prunekit
