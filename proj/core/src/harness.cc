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

#include "prunekit/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <thread>
#include <tuple>

#include "prunekit/errors.h"
#include "prunekit/select.h"

namespace prunekit {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined input.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs body(i) for i in [0, count) on up to `jobs` threads. `body` must not
// throw.
void ParallelFor(std::size_t count, std::size_t jobs,
                 const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

// Best value over prefixes of one greedy run, per size 0..k.
struct PrefixBest {
  std::vector<double> values;
  std::vector<ElementSet> sets;
};

PrefixBest GreedyPrefixBest(Oracle& oracle, std::span<const Element> pool,
                            std::size_t k) {
  const GreedyRun run = Greedy(oracle, pool, k);
  PrefixBest out;
  ElementSet prefix;
  double best = oracle.Value(prefix);
  ElementSet best_set;
  out.values.push_back(best);
  out.sets.push_back(best_set);
  for (std::size_t i = 1; i <= k; ++i) {
    if (i <= run.picks.size()) {
      prefix.push_back(run.picks[i - 1]);
      const ElementSet canonical = Canonical(prefix);
      const double v = oracle.Value(canonical);
      if (v > best) {
        best = v;
        best_set = canonical;
      }
    }
    out.values.push_back(best);
    out.sets.push_back(best_set);
  }
  return out;
}

bool Contains(std::span<const Element> outer, std::span<const Element> inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::string_view ReferenceName(ReferenceMode mode) {
  return mode == ReferenceMode::kExact ? "exact" : "greedy";
}

ReferenceMode ParseReference(std::string_view name) {
  if (name == "exact") return ReferenceMode::kExact;
  if (name == "greedy") return ReferenceMode::kGreedy;
  throw ConfigError("reference must be 'exact' or 'greedy', got '" +
                    std::string(name) + "'");
}

ReferenceProfile CardinalityReference(const SetFunction& f, std::size_t k,
                                      ReferenceMode mode, double guard) {
  ReferenceProfile ref;
  ref.mode = mode;
  const ElementSet all = FullSet(f.size());
  std::vector<double> values;
  if (mode == ReferenceMode::kExact) {
    ExactOptions opts;
    opts.guard = guard;
    values = OptCardinality(f, all, k, opts).opt;
  } else {
    Oracle oracle(f);
    values = GreedyPrefixBest(oracle, all, k).values;
  }
  for (std::size_t b = 1; b <= k; ++b) {
    ref.budgets.push_back(static_cast<double>(b));
    ref.values.push_back(values[b]);
  }
  return ref;
}

double ContainmentReport::alpha_top() const {
  return alpha.empty() ? 1.0 : alpha.back();
}

double ContainmentReport::alpha_min() const {
  return alpha.empty() ? 1.0 : *std::min_element(alpha.begin(), alpha.end());
}

double ContainmentRatio(double inside, double reference) {
  if (!(reference > 0.0)) return 1.0;
  return inside / reference;
}

namespace {

void FillAlpha(ContainmentReport& report, double tol) {
  report.alpha.clear();
  for (std::size_t i = 0; i < report.budgets.size(); ++i) {
    double a = ContainmentRatio(report.best_inside[i],
                                report.reference_values[i]);
    if (report.reference == ReferenceMode::kExact && a > 1.0 &&
        report.best_inside[i] <=
            report.reference_values[i] +
                tol * std::max(1.0, std::abs(report.reference_values[i]))) {
      // Incremental evaluation along different paths; same set value.
      a = 1.0;
    }
    if (a > 1.0) report.alpha_above_one = true;
    report.alpha.push_back(a);
  }
}

}  // namespace

ContainmentReport EvaluateContainment(const SetFunction& f,
                                      std::span<const Element> pruned,
                                      std::size_t k, ReferenceMode mode,
                                      const ReferenceProfile* reference,
                                      double guard) {
  const ElementSet p = Canonical(pruned);
  ReferenceProfile computed;
  if (reference == nullptr) {
    computed = CardinalityReference(f, k, mode, guard);
    reference = &computed;
  } else if (reference->values.size() != k || reference->mode != mode) {
    throw ConfigError("containment: reference profile does not match k/mode");
  }

  ContainmentReport report;
  report.reference = mode;
  report.budgets = reference->budgets;
  report.reference_values = reference->values;

  const auto start = Clock::now();
  const bool fits = SubsetCount(p.size(), k) <= guard;
  if (mode == ReferenceMode::kExact && !fits) {
    throw GuardExceeded(SubsetCount(p.size(), k), guard);
  }
  if (fits) {
    ExactOptions opts;
    opts.guard = guard;
    const OptProfile inside = OptCardinality(f, p, k, opts);
    for (std::size_t b = 1; b <= k; ++b) {
      report.best_inside.push_back(inside.opt[b]);
      report.best_inside_sets.push_back(inside.argmax[b]);
    }
    report.extraction_stats.queries = inside.enumerated;
  } else {
    Oracle oracle(f);
    const PrefixBest inside = GreedyPrefixBest(oracle, p, k);
    for (std::size_t b = 1; b <= k; ++b) {
      report.best_inside.push_back(inside.values[b]);
      report.best_inside_sets.push_back(inside.sets[b]);
    }
    report.inside_exact = false;
    report.extraction_stats = oracle.stats();
  }
  report.extraction_seconds = SecondsSince(start);
  FillAlpha(report, f.tolerance() > 0.0 ? f.tolerance() : kRealTolerance);
  return report;
}

ContainmentReport EvaluateContainment(const SetFunction& f,
                                      const PrunedSet& pruned, std::size_t k,
                                      ReferenceMode mode,
                                      const ReferenceProfile* reference,
                                      double guard) {
  ContainmentReport report =
      EvaluateContainment(f, pruned.elements, k, mode, reference, guard);
  report.prune_stats = pruned.stats;
  report.prune_seconds = pruned.elapsed_seconds;
  return report;
}

ContainmentReport EvaluateKnapsackContainment(
    const SetFunction& f, const KnapsackPrunedSet& pruned,
    const KnapsackInstance& instance, std::span<const double> budgets,
    ReferenceMode mode, double guard) {
  instance.Validate();
  ContainmentReport report;
  report.reference = mode;
  report.budgets.assign(budgets.begin(), budgets.end());
  report.prune_stats = pruned.stats;
  report.prune_seconds = pruned.elapsed_seconds;

  const ElementSet all = FullSet(f.size());
  if (mode == ReferenceMode::kExact) {
    ExactOptions opts;
    opts.guard = guard;
    report.reference_values =
        OptKnapsack(f, all, instance.costs, budgets, opts).opt;
  } else {
    Oracle oracle(f);
    for (double b : budgets) {
      const DensityRun run = DensityGreedy(oracle, all, instance.costs, b, b);
      double best = oracle.Value(Canonical(run.picks));
      for (Element e : all) {
        if (instance.costs[e] <= b) best = std::max(best, oracle.Value({&e, 1}));
      }
      report.reference_values.push_back(std::max(best, oracle.Value({})));
    }
  }

  const auto start = Clock::now();
  Oracle oracle(f);
  ExtractOptions extract;
  report.inside_exact = pruned.elements.size() <= extract.exhaustive_cap;
  for (double b : budgets) {
    ElementSet q = ExtractBudget(pruned, oracle, instance, b, extract);
    report.best_inside.push_back(oracle.Value(q));
    report.best_inside_sets.push_back(std::move(q));
  }
  report.extraction_stats = oracle.stats();
  report.extraction_seconds = SecondsSince(start);
  FillAlpha(report, f.tolerance() > 0.0 ? f.tolerance() : kRealTolerance);
  return report;
}

// --- Sweeps ------------------------------------------------------------------

void SweepConfig::Validate() const {
  if (instances.empty()) throw ConfigError("sweep: no instances");
  if (algorithms.empty()) throw ConfigError("sweep: no algorithms");
  if (omegas.empty()) throw ConfigError("sweep: no omega values");
  if (seeds.empty()) throw ConfigError("sweep: no seeds");
  if (k == 0) throw ConfigError("sweep: k must be >= 1");
  for (double w : omegas) {
    if (!(w >= 1.0)) throw ConfigError("sweep: omega must be >= 1");
  }
}

SweepResult Sweep(const SweepConfig& config) {
  config.Validate();
  const std::size_t ni = config.instances.size();
  const std::size_t ns = config.seeds.size();
  const std::size_t na = config.algorithms.size();
  const std::size_t nw = config.omegas.size();

  // One objective and reference per (instance, seed).
  struct Prepared {
    std::unique_ptr<SetFunction> f;
    ReferenceProfile reference;
    std::string error;
  };
  std::vector<Prepared> prepared(ni * ns);
  ParallelFor(prepared.size(), config.jobs, [&](std::size_t idx) {
    Prepared& slot = prepared[idx];
    try {
      const auto& inst = config.instances[idx / ns];
      slot.f = MakeObjective(Generate(inst.gen, config.seeds[idx % ns]));
      slot.reference =
          CardinalityReference(*slot.f, config.k, config.reference);
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  });

  SweepResult result;
  result.rows.resize(ni * ns * na * nw);
  ParallelFor(result.rows.size(), config.jobs, [&](std::size_t idx) {
    const std::size_t w = idx % nw;
    const std::size_t a = (idx / nw) % na;
    const std::size_t s = (idx / (nw * na)) % ns;
    const std::size_t i = idx / (nw * na * ns);
    SweepRow& row = result.rows[idx];
    row.instance_id = config.instances[i].id;
    row.family = FamilyName(config.instances[i].gen);
    row.algorithm = config.algorithms[a];
    row.omega = config.omegas[w];
    row.seed = config.seeds[s];
    const Prepared& prep = prepared[i * ns + s];
    if (!prep.error.empty()) {
      row.error = prep.error;
      return;
    }
    try {
      PruneParams params;
      params.k = config.k;
      params.omega = row.omega;
      params.seed = row.seed;
      if (row.algorithm == Algorithm::kThresholdStream ||
          row.algorithm == Algorithm::kFastBudgetRange) {
        params.epsilon = config.epsilon;
      }
      Oracle oracle(*prep.f);
      const PrunedSet pruned = Prune(row.algorithm, oracle, params);
      row.params = pruned.params;
      row.pruned = pruned.elements;
      row.report = EvaluateContainment(*prep.f, pruned, config.k,
                                       config.reference, &prep.reference);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  // Aggregate per (instance, algorithm, omega) over seeds.
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t w = 0; w < nw; ++w) {
        SweepCell cell;
        cell.instance_id = config.instances[i].id;
        cell.family = FamilyName(config.instances[i].gen);
        cell.algorithm = config.algorithms[a];
        cell.omega = config.omegas[w];
        std::vector<double> alphas;
        double size_sum = 0.0;
        double query_sum = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
          const SweepRow& row =
              result.rows[((i * ns + s) * na + a) * nw + w];
          ++cell.rows;
          if (!row.report) {
            ++cell.errors;
            continue;
          }
          alphas.push_back(row.report->alpha_top());
          size_sum += static_cast<double>(row.pruned.size());
          query_sum += static_cast<double>(row.report->prune_stats.queries);
        }
        if (!alphas.empty()) {
          const double m = static_cast<double>(alphas.size());
          double sum = 0.0;
          for (double x : alphas) sum += x;
          cell.mean_alpha = sum / m;
          double sq = 0.0;
          for (double x : alphas) {
            sq += (x - cell.mean_alpha) * (x - cell.mean_alpha);
          }
          cell.std_alpha = alphas.size() > 1 ? std::sqrt(sq / (m - 1.0)) : 0.0;
          cell.min_alpha = *std::min_element(alphas.begin(), alphas.end());
          cell.mean_pruned_size = size_sum / m;
          cell.mean_queries = query_sum / m;
        }
        result.cells.push_back(cell);
      }
    }
  }
  return result;
}

// --- Separation study ----------------------------------------------------------

SeparationResult SeparationStudy(const SeparationConfig& config) {
  if (config.trials < 1) throw ConfigError("separation: trials must be >= 1");
  if (config.k < 1 || config.omega < 1) {
    throw ConfigError("separation: k and omega must be >= 1");
  }
  SeparationResult out;
  out.trials = config.trials;
  const ElementSet all = FullSet(config.n);
  ExactOptions exact;
  exact.retain_all_optima = true;
  const double tol = kRealTolerance;
  double alpha_g_sum = 0.0;
  double alpha_s_sum = 0.0;

  for (std::size_t t = 0; t < config.trials; ++t) {
    const InterferenceCoverageFunction f(GenerateInterference(
        config.n, config.universe, DeriveSeed(config.seed, t), config.params));
    const OptProfile opt = OptCardinality(f, all, config.k, exact);
    const double best = opt.opt[config.k];
    const ElementSet& argmax = opt.argmax[config.k];
    const auto& optima = opt.optima[config.k];

    Oracle oracle(f);
    const ElementSet pg = PruneStdGreedy(oracle, config.omega * config.k).elements;
    const ElementSet ps = PruneSeqDisjoint(oracle, config.k, config.omega).elements;

    if (Contains(pg, argmax)) ++out.greedy_contain;
    if (Contains(ps, argmax)) ++out.sdg_contain;
    const auto any_in = [&](const ElementSet& p) {
      return std::any_of(optima.begin(), optima.end(),
                         [&](const ElementSet& o) { return Contains(p, o); });
    };
    if (any_in(pg)) ++out.greedy_contain_any;
    if (any_in(ps)) ++out.sdg_contain_any;

    GreedyOptions gopts;
    gopts.stop_at_zero = config.extract_stop_at_zero;
    const GreedyRun full = Greedy(oracle, all, config.k, gopts);
    if (oracle.Value(Canonical(full.picks)) < best - tol) {
      ++out.greedy_k_suboptimal;
    }

    // Extraction: best k-subset inside each pruned set.
    double vg = 0.0;
    double vs = 0.0;
    if (config.extraction == SeparationExtraction::kExact) {
      vg = OptCardinality(f, pg, config.k).opt[config.k];
      vs = OptCardinality(f, ps, config.k).opt[config.k];
    } else {
      vg = oracle.Value(Canonical(Greedy(oracle, pg, config.k, gopts).picks));
      vs = oracle.Value(Canonical(Greedy(oracle, ps, config.k, gopts).picks));
    }
    if (vs > vg + tol) ++out.sdg_value_wins;
    if (vg > vs + tol) ++out.greedy_value_wins;
    if (best > 0.0) out.max_gap = std::max(out.max_gap, (vs - vg) / best);
    alpha_g_sum += ContainmentRatio(vg, best);
    alpha_s_sum += ContainmentRatio(vs, best);
  }
  out.mean_alpha_greedy = alpha_g_sum / static_cast<double>(config.trials);
  out.mean_alpha_sdg = alpha_s_sum / static_cast<double>(config.trials);
  return out;
}

// --- Statistics --------------------------------------------------------------

ConfidenceInterval PairedBootstrap(std::span<const double> diffs,
                                   std::size_t resamples, std::uint64_t seed) {
  if (diffs.empty()) throw ConfigError("bootstrap: empty input");
  if (resamples == 0) throw ConfigError("bootstrap: resamples must be >= 1");
  ConfidenceInterval ci;
  double sum = 0.0;
  for (double d : diffs) sum += d;
  ci.mean = sum / static_cast<double>(diffs.size());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, diffs.size() - 1);
  std::vector<double> means(resamples);
  for (double& m : means) {
    double s = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) s += diffs[pick(rng)];
    m = s / static_cast<double>(diffs.size());
  }
  std::sort(means.begin(), means.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(means.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, means.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return means[lo] + frac * (means[hi] - means[lo]);
  };
  ci.lo = quantile(0.025);
  ci.hi = quantile(0.975);
  return ci;
}

// --- Speedup probe -------------------------------------------------------------

namespace {

// Seconds per OptCardinality call: median of three repeats, each looping
// until it has run for at least min_seconds.
double TimeEnumeration(const SetFunction& f, std::span<const Element> universe,
                       std::size_t k, double min_seconds, double guard) {
  ExactOptions opts;
  opts.guard = guard;
  std::vector<double> samples;
  for (int rep = 0; rep < 3; ++rep) {
    std::size_t calls = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
      const OptProfile profile = OptCardinality(f, universe, k, opts);
      static_cast<void>(profile);
      ++calls;
      elapsed = SecondsSince(start);
    } while (elapsed < min_seconds);
    samples.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[1];
}

}  // namespace

SpeedupResult SpeedupProbe(const SetFunction& f,
                           std::span<const Element> pruned, std::size_t k,
                           double min_seconds, double guard) {
  const ElementSet p = Canonical(pruned);
  const ElementSet all = FullSet(f.size());
  SpeedupResult out;
  out.subsets_full = SubsetCount(all.size(), k);
  out.subsets_pruned = SubsetCount(p.size(), k);
  if (out.subsets_pruned > guard) {
    throw GuardExceeded(out.subsets_pruned, guard);
  }
  out.t_pruned = TimeEnumeration(f, p, k, min_seconds, guard);
  if (out.subsets_full <= guard) {
    out.t_full = TimeEnumeration(f, all, k, min_seconds, guard);
    out.alpha = EvaluateContainment(f, p, k, ReferenceMode::kExact, nullptr,
                                    guard)
                    .alpha_top();
  } else {
    out.guard_limited = true;
    out.t_full = out.t_pruned / out.subsets_pruned * out.subsets_full;
    out.alpha = EvaluateContainment(f, p, k, ReferenceMode::kGreedy, nullptr,
                                    guard)
                    .alpha_top();
  }
  out.ratio = out.t_pruned > 0.0 ? out.t_full / out.t_pruned : 0.0;
  return out;
}

}  // namespace prunekit
