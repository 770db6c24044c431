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


#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "prunekit/errors.h"
#include "prunekit/harness.h"
#include "prunekit/instances.h"
#include "prunekit/objectives.h"
#include "prunekit/oracle.h"
#include "prunekit/prune.h"
#include "testing.h"

namespace prunekit {
namespace {

TEST(Ratio, ZeroDenominatorIsOne) {
  EXPECT_EQ(ContainmentRatio(0.0, 0.0), 1.0);
  EXPECT_EQ(ContainmentRatio(3.0, -1.0), 1.0);
  EXPECT_DOUBLE_EQ(ContainmentRatio(1.0, 4.0), 0.25);
}

TEST(Reference, Names) {
  EXPECT_EQ(ParseReference("exact"), ReferenceMode::kExact);
  EXPECT_EQ(ParseReference("greedy"), ReferenceMode::kGreedy);
  EXPECT_EQ(ReferenceName(ReferenceMode::kGreedy), "greedy");
  EXPECT_THROW(ParseReference("ip"), ConfigError);
}

TEST(Containment, FullSetGivesOne) {
  const CutFunction f(CutSpec{GenerateGnm(14, 35, 1)});
  const ContainmentReport r =
      EvaluateContainment(f, FullSet(14), 4, ReferenceMode::kExact);
  ASSERT_EQ(r.alpha.size(), 4u);
  for (double a : r.alpha) EXPECT_EQ(a, 1.0);
  EXPECT_TRUE(r.inside_exact);
  EXPECT_FALSE(r.alpha_above_one);
}

TEST(Containment, AllZeroObjectiveGivesOne) {
  const CoverageFunction f(Modular(std::vector<double>{0, 0, 0}));
  const ContainmentReport r =
      EvaluateContainment(f, ElementSet{}, 2, ReferenceMode::kExact);
  for (double a : r.alpha) EXPECT_EQ(a, 1.0);
}

TEST(Containment, MatchesBruteForceRatio) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CutFunction f(CutSpec{GenerateGnm(14, 30, seed)});
    const PrunedSet p = PruneRandom(14, 6, seed);
    const ContainmentReport r = EvaluateContainment(f, p.elements, 3,
                                                    ReferenceMode::kExact);
    const std::vector<double> opt = testing::BruteOpt(f, 3);
    const std::vector<double> inside = testing::BruteOpt(f, p.elements, 3);
    for (std::size_t b = 1; b <= 3; ++b) {
      EXPECT_DOUBLE_EQ(r.alpha[b - 1], inside[b] / opt[b]);
      EXPECT_GE(r.alpha[b - 1], 0.0);
      EXPECT_LE(r.alpha[b - 1], 1.0);
    }
  }
}

TEST(Containment, ExactModeNeedsGuard) {
  const CutFunction f(CutSpec{GenerateGnm(30, 90, 1)});
  EXPECT_THROW(EvaluateContainment(f, FullSet(30), 5, ReferenceMode::kExact,
                                   nullptr, 1000.0),
               GuardExceeded);
}

TEST(Containment, GreedyReferenceFallsBackOnLargeP) {
  const CutFunction f(CutSpec{GenerateGnm(30, 90, 1)});
  const ContainmentReport r = EvaluateContainment(
      f, FullSet(30), 5, ReferenceMode::kGreedy, nullptr, 1000.0);
  EXPECT_FALSE(r.inside_exact);
  // Same greedy over the same set.
  for (double a : r.alpha) EXPECT_DOUBLE_EQ(a, 1.0);
}

TEST(Containment, GreedyReferenceMayExceedOne) {
  // Greedy on N takes 0 first and misses the pair {1, 2}.
  const CoverageFunction f(UnitCoverage({{0, 1, 2}, {0, 3}, {1, 2, 4}}));
  const ContainmentReport r =
      EvaluateContainment(f, FullSet(3), 2, ReferenceMode::kGreedy);
  EXPECT_GE(r.alpha[1], 1.0);
}

TEST(Containment, ReferenceProfileReuse) {
  const CutFunction f(CutSpec{GenerateGnm(14, 35, 2)});
  const ReferenceProfile ref = CardinalityReference(f, 3, ReferenceMode::kExact);
  const ContainmentReport a =
      EvaluateContainment(f, ElementSet{0, 1, 2, 3}, 3, ReferenceMode::kExact, &ref);
  const ContainmentReport b =
      EvaluateContainment(f, ElementSet{0, 1, 2, 3}, 3, ReferenceMode::kExact);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_THROW(EvaluateContainment(f, ElementSet{0}, 2, ReferenceMode::kExact, &ref),
               ConfigError);
}

TEST(Containment, PrunedSetCarriesPruneStats) {
  const CutFunction f(CutSpec{GenerateGnm(16, 40, 3)});
  Oracle oracle(f);
  const PrunedSet p = PruneSeqDisjoint(oracle, 3, 2);
  const ContainmentReport r = EvaluateContainment(f, p, 3, ReferenceMode::kExact);
  EXPECT_EQ(r.prune_stats.queries, p.stats.queries);
}

TEST(KnapsackContainment, SandwichAndFeasibility) {
  const CoverageFunction f(GenerateCoverage(12, 25, 2, 6, 3));
  Oracle oracle(f);
  KnapsackInstance inst;
  inst.budget = 3.0;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.3, 1.5);
  for (int i = 0; i < 12; ++i) inst.costs.push_back(u(rng));
  const KnapsackPrunedSet pruned = PruneSdgDensity(oracle, inst, 2);
  const std::vector<double> budgets = BudgetGridLog(inst.budget);
  const ContainmentReport r = EvaluateKnapsackContainment(
      f, pruned, inst, budgets, ReferenceMode::kExact);
  ASSERT_EQ(r.alpha.size(), budgets.size());
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    EXPECT_LE(r.alpha[i], 1.0);
    EXPECT_LE(inst.Cost(r.best_inside_sets[i]), budgets[i]);
    EXPECT_DOUBLE_EQ(r.reference_values[i],
                     testing::BruteKnapsack(f, FullSet(12), inst.costs, budgets[i]));
  }
}

SweepConfig SmallSweep() {
  SweepConfig c;
  c.instances.push_back({"g", GnmGen{14, 30}});
  c.algorithms = {Algorithm::kSeqDisjoint, Algorithm::kRandom};
  c.omegas = {2, 3, 5};
  c.seeds = {1, 2};
  c.k = 3;
  return c;
}

TEST(Sweep, SingleCell) {
  SweepConfig c;
  c.instances.push_back({"g", GnmGen{12, 20}});
  c.algorithms = {Algorithm::kStdGreedy};
  c.omegas = {2};
  c.seeds = {7};
  c.k = 3;
  const SweepResult r = Sweep(c);
  ASSERT_EQ(r.rows.size(), 1u);
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].rows, 1u);
  EXPECT_EQ(r.cells[0].std_alpha, 0.0);
}

TEST(Sweep, CellCountsAndOrder) {
  const SweepResult r = Sweep(SmallSweep());
  EXPECT_EQ(r.rows.size(), 2u * 2u * 3u);
  EXPECT_EQ(r.cells.size(), 2u * 3u);
  std::size_t total = 0;
  for (const SweepCell& cell : r.cells) {
    total += cell.rows;
    EXPECT_EQ(cell.errors, 0u);
  }
  EXPECT_EQ(total, r.rows.size());
  EXPECT_EQ(r.cells[0].algorithm, Algorithm::kSeqDisjoint);
  EXPECT_EQ(r.cells[0].omega, 2.0);
  EXPECT_EQ(r.cells[1].omega, 3.0);
  for (const SweepRow& row : r.rows) {
    ASSERT_TRUE(row.report.has_value()) << row.error;
    for (double a : row.report->alpha) {
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, 1.0);
    }
  }
}

TEST(Sweep, AggregatesMatchRows) {
  const SweepResult r = Sweep(SmallSweep());
  for (const SweepCell& cell : r.cells) {
    std::vector<double> alphas;
    for (const SweepRow& row : r.rows) {
      if (row.algorithm == cell.algorithm && row.omega == cell.omega) {
        alphas.push_back(row.report->alpha_top());
      }
    }
    ASSERT_EQ(alphas.size(), cell.rows - cell.errors);
    const double mean = std::accumulate(alphas.begin(), alphas.end(), 0.0) /
                        static_cast<double>(alphas.size());
    EXPECT_NEAR(cell.mean_alpha, mean, 1e-12);
    EXPECT_NEAR(cell.min_alpha, *std::min_element(alphas.begin(), alphas.end()),
                1e-12);
  }
}

TEST(Sweep, JobsDoNotChangeResults) {
  SweepConfig c = SmallSweep();
  const SweepResult serial = Sweep(c);
  c.jobs = 3;
  const SweepResult parallel = Sweep(c);
  ASSERT_EQ(serial.rows.size(), parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    EXPECT_EQ(serial.rows[i].pruned, parallel.rows[i].pruned);
    EXPECT_EQ(serial.rows[i].report->alpha, parallel.rows[i].report->alpha);
  }
}

TEST(Sweep, ErrorsAreRecordedNotThrown) {
  SweepConfig c;
  c.instances.push_back({"big", GnmGen{40, 100}});
  c.algorithms = {Algorithm::kRandom};
  c.omegas = {2};
  c.seeds = {1};
  c.k = 3;
  c.reference = ReferenceMode::kExact;
  ::setenv("PRUNEKIT_GUARD", "100", 1);
  const SweepResult r = Sweep(c);
  ::unsetenv("PRUNEKIT_GUARD");
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_FALSE(r.rows[0].error.empty());
  EXPECT_EQ(r.cells[0].errors, 1u);
}

TEST(Sweep, Validation) {
  SweepConfig c = SmallSweep();
  c.algorithms.clear();
  EXPECT_THROW(c.Validate(), ConfigError);
  c = SmallSweep();
  c.k = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = SmallSweep();
  c.omegas = {0.5};
  EXPECT_THROW(c.Validate(), ConfigError);
}

TEST(Separation, NoInterferenceIsMonotoneCoverage) {
  SeparationConfig c;
  c.trials = 60;
  c.params.pair_probability = 0.0;
  const SeparationResult r = SeparationStudy(c);
  EXPECT_EQ(r.trials, 60u);
  // Both sets hold the greedy prefix, so containment is high for both.
  EXPECT_GE(r.rate(r.greedy_contain_any), 0.5);
  EXPECT_GE(r.rate(r.sdg_contain_any), 0.5);
  EXPECT_NEAR(r.rate(r.greedy_contain_any), r.rate(r.sdg_contain_any), 0.15);
}

TEST(Separation, CountsAreConsistent) {
  SeparationConfig c;
  c.trials = 80;
  const SeparationResult r = SeparationStudy(c);
  EXPECT_LE(r.greedy_contain, r.greedy_contain_any);
  EXPECT_LE(r.sdg_contain, r.sdg_contain_any);
  EXPECT_LE(r.sdg_value_wins + r.greedy_value_wins, r.trials);
  EXPECT_GE(r.max_gap, 0.0);
  EXPECT_LE(r.mean_alpha_sdg, 1.0 + 1e-12);
  const SeparationResult again = SeparationStudy(c);
  EXPECT_EQ(again.sdg_contain, r.sdg_contain);
  EXPECT_EQ(again.sdg_value_wins, r.sdg_value_wins);
}

// Greedy extraction picks the same set from both pruned universes: the first
// SDG run is the greedy prefix of size k.
TEST(Separation, GreedyExtractionCannotSeparate) {
  SeparationConfig c;
  c.trials = 50;
  c.extraction = SeparationExtraction::kGreedy;
  const SeparationResult r = SeparationStudy(c);
  EXPECT_EQ(r.sdg_value_wins, 0u);
  EXPECT_EQ(r.greedy_value_wins, 0u);
}

TEST(Separation, Validation) {
  SeparationConfig c;
  c.trials = 0;
  EXPECT_THROW(SeparationStudy(c), ConfigError);
}

TEST(Bootstrap, ConstantDiffs) {
  const std::vector<double> d(30, 0.092);
  const ConfidenceInterval ci = PairedBootstrap(d, 2000, 42);
  EXPECT_NEAR(ci.lo, 0.092, 1e-12);
  EXPECT_NEAR(ci.hi, 0.092, 1e-12);
  EXPECT_NEAR(ci.mean, 0.092, 1e-12);
}

TEST(Bootstrap, BalancedDiffsStraddleZero) {
  const std::vector<double> d{1.0, -1.0};
  const ConfidenceInterval ci = PairedBootstrap(d);
  EXPECT_LT(ci.lo, 0.0);
  EXPECT_GT(ci.hi, 0.0);
}

TEST(Bootstrap, WidthMatchesNormalApproximation) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.092, 0.23);
  std::vector<double> d(50);
  for (double& x : d) x = g(rng);
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / 50.0;
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / 49.0);
  const double expected = 2.0 * 1.96 * sd / std::sqrt(50.0);
  const ConfidenceInterval ci = PairedBootstrap(d);
  EXPECT_NEAR(ci.hi - ci.lo, expected, 0.2 * expected);
  EXPECT_NEAR(ci.mean, mean, 1e-12);
}

TEST(Bootstrap, Validation) {
  EXPECT_THROW(PairedBootstrap(std::vector<double>{}), ConfigError);
  EXPECT_THROW(PairedBootstrap(std::vector<double>{1.0}, 0), ConfigError);
}

TEST(Speedup, FullSetRatioNearOne) {
  const CutFunction f(CutSpec{GenerateGnm(14, 35, 1)});
  const SpeedupResult r = SpeedupProbe(f, FullSet(14), 3, 1e-3);
  EXPECT_EQ(r.alpha, 1.0);
  EXPECT_GT(r.ratio, 0.5);
  EXPECT_LT(r.ratio, 2.0);
  EXPECT_FALSE(r.guard_limited);
}

TEST(Speedup, PrunedSetIsFaster) {
  const CutFunction f(CutSpec{GenerateGnm(24, 72, 1)});
  Oracle oracle(f);
  const PrunedSet p = PruneSeqDisjoint(oracle, 4, 3, 10);
  const SpeedupResult r = SpeedupProbe(f, p.elements, 4);
  EXPECT_DOUBLE_EQ(r.subsets_full, SubsetCount(24, 4));
  EXPECT_DOUBLE_EQ(r.subsets_pruned, SubsetCount(10, 4));
  EXPECT_GT(r.ratio, 5.0);
}

TEST(Speedup, GuardLimitedFullSet) {
  const CutFunction f(CutSpec{GenerateGnm(24, 72, 1)});
  const SpeedupResult r =
      SpeedupProbe(f, ElementSet{0, 1, 2, 3, 4, 5}, 3, 1e-4, 500.0);
  EXPECT_TRUE(r.guard_limited);
  EXPECT_GT(r.ratio, 1.0);
}

}  // namespace
}  // namespace prunekit
