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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "prunekit/errors.h"
#include "prunekit/instances.h"
#include "prunekit/objectives.h"
#include "prunekit/penalty.h"

namespace prunekit {
namespace {

bool IsSimple(const Graph& g) {
  std::set<std::pair<Element, Element>> seen;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) return false;
    if (e.u < 0 || e.v < 0 || e.u >= static_cast<Element>(g.n) ||
        e.v >= static_cast<Element>(g.n)) {
      return false;
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

TEST(Gnm, EmptyAndComplete) {
  EXPECT_TRUE(GenerateGnm(10, 0, 1).edges.empty());
  const Graph k4 = GenerateGnm(4, 6, 1);
  EXPECT_EQ(k4.edges.size(), 6u);
  EXPECT_TRUE(IsSimple(k4));
}

TEST(Gnm, ExactEdgeCountAndSimple) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t m : {1u, 50u, 300u, 430u}) {
      const Graph g = GenerateGnm(30, m, seed);
      EXPECT_EQ(g.edges.size(), m);
      EXPECT_TRUE(IsSimple(g));
    }
  }
}

TEST(Gnm, MeanDegree) {
  const Graph g = GenerateGnm(100, 1000, 3);
  EXPECT_DOUBLE_EQ(2.0 * static_cast<double>(g.edges.size()) / 100.0, 20.0);
}

TEST(Gnm, SeededAndValidated) {
  EXPECT_EQ(GenerateGnm(30, 90, 5), GenerateGnm(30, 90, 5));
  EXPECT_NE(GenerateGnm(30, 90, 5), GenerateGnm(30, 90, 6));
  EXPECT_THROW(GenerateGnm(4, 7, 1), ConfigError);
}

TEST(Gnm, EdgesRoughlyUniform) {
  // Each of the 6 pairs of K4 appears in 3-edge graphs with probability 1/2.
  std::map<std::pair<Element, Element>, int> hits;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    for (const Edge& e : GenerateGnm(4, 3, seed).edges) ++hits[std::minmax(e.u, e.v)];
  }
  ASSERT_EQ(hits.size(), 6u);
  for (const auto& [pair, h] : hits) EXPECT_NEAR(h / 4000.0, 0.5, 0.04);
}

TEST(Planted, DisjointCliques) {
  const Graph g = GeneratePlanted(12, 3, 1.0, 0.0, 1);
  EXPECT_EQ(g.edges.size(), 3u * 6u);
  for (const Edge& e : g.edges) EXPECT_EQ(e.u / 4, e.v / 4);
  EXPECT_TRUE(IsSimple(g));
}

TEST(Planted, BlockSizeMode) {
  const Graph g = GeneratePlanted(12, 3, 1.0, 0.0, 1, BlockMode::kSize);
  EXPECT_EQ(g.edges.size(), 4u * 3u);
}

TEST(Planted, RemainderJoinsLastBlock) {
  const Graph g = GeneratePlanted(10, 3, 1.0, 0.0, 1);
  // Blocks of 3, 3 and 4.
  EXPECT_EQ(g.edges.size(), 3u + 3u + 6u);
}

TEST(Planted, EqualProbabilitiesMatchBinomialExpectation) {
  double total = 0.0;
  const int reps = 40;
  for (int s = 0; s < reps; ++s) {
    total += static_cast<double>(GeneratePlanted(60, 6, 0.2, 0.2, s).edges.size());
  }
  const double expected = 0.2 * 60 * 59 / 2;
  EXPECT_NEAR(total / reps, expected, 0.05 * expected);
}

TEST(Planted, Validation) {
  EXPECT_THROW(GeneratePlanted(10, 2, 1.5, 0.0, 1), ConfigError);
  EXPECT_THROW(GeneratePlanted(10, 2, 0.5, -0.1, 1), ConfigError);
  EXPECT_THROW(GeneratePlanted(10, 0, 0.5, 0.1, 1), ConfigError);
}

TEST(Interference, Distributions) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const InterferenceSpec s = GenerateInterference(20, 30, seed);
    ASSERT_EQ(s.covers.size(), 20u);
    for (const auto& c : s.covers) {
      EXPECT_GE(c.size(), 3u);
      EXPECT_LE(c.size(), 8u);
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      EXPECT_EQ(std::adjacent_find(c.begin(), c.end()), c.end());
      for (auto item : c) EXPECT_LT(item, 30);
    }
    for (const auto& p : s.intf) {
      EXPECT_LT(p.a, p.b);
      EXPECT_GE(p.intensity, 1.0);
      EXPECT_LE(p.intensity, 5.0);
    }
    EXPECT_GE(s.lambda, 0.5);
    EXPECT_LE(s.lambda, 2.5);
  }
}

TEST(Interference, PairRate) {
  std::size_t pairs = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    pairs += GenerateInterference(20, 30, seed).intf.size();
  }
  EXPECT_NEAR(static_cast<double>(pairs) / (50.0 * 190.0), 0.25, 0.02);
}

TEST(Interference, NoPairsWhenProbabilityZero) {
  InterferenceParams params;
  params.pair_probability = 0.0;
  EXPECT_TRUE(GenerateInterference(20, 30, 1, params).intf.empty());
}

TEST(Interference, Seeded) {
  const InterferenceSpec a = GenerateInterference(20, 30, 9);
  const InterferenceSpec b = GenerateInterference(20, 30, 9);
  EXPECT_EQ(a.covers, b.covers);
  EXPECT_EQ(a.intf, b.intf);
  EXPECT_EQ(a.lambda, b.lambda);
}

TEST(Coverage, SizesAndWeights) {
  const CoverageSpec c = GenerateCoverage(15, 25, 2, 5, 4);
  ASSERT_EQ(c.covers.size(), 15u);
  EXPECT_EQ(c.weights, std::vector<double>(25, 1.0));
  for (const auto& s : c.covers) {
    EXPECT_GE(s.size(), 2u);
    EXPECT_LE(s.size(), 5u);
  }
  EXPECT_THROW(GenerateCoverage(5, 3, 2, 5, 1), ConfigError);
}

TEST(Similarity, UnitInterval) {
  const Matrix m = GenerateSimilarity(7, 9, 2);
  EXPECT_EQ(m.rows, 7u);
  EXPECT_EQ(m.cols, 9u);
  for (double x : m.data) {
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_EQ(m, GenerateSimilarity(7, 9, 2));
}

TEST(GenSpec, FamiliesAndObjectiveKinds) {
  EXPECT_EQ(FamilyName(GnmGen{}), "gnm");
  EXPECT_EQ(FamilyName(PlantedGen{}), "planted");
  EXPECT_EQ(FamilyName(InterferenceGen{}), "interference");
  EXPECT_EQ(FamilyName(SimilarityGen{}), "similarity");
  EXPECT_EQ(FamilyName(CoverageGen{}), "coverage");
  EXPECT_EQ(ObjectiveKind(Generate(GnmGen{10, 20}, 1)), "cut");
  EXPECT_EQ(ObjectiveKind(Generate(PlantedGen{20, 4, 0.5, 0.1}, 1)), "cut");
  EXPECT_EQ(ObjectiveKind(Generate(InterferenceGen{}, 1)), "interference");
  EXPECT_EQ(ObjectiveKind(Generate(SimilarityGen{}, 1)), "facility_location");
  EXPECT_EQ(ObjectiveKind(Generate(CoverageGen{}, 1)), "coverage");
}

// --- Penalty fitting -----------------------------------------------------------

TEST(Isotonic, PoolsViolators) {
  const std::vector<double> v{3, 1, 2, 0};
  const std::vector<double> w{1, 1, 1, 1};
  const std::vector<double> fit = IsotonicNonIncreasing(v, w);
  EXPECT_EQ(fit, (std::vector<double>{3, 1.5, 1.5, 0}));
}

TEST(Isotonic, Weighted) {
  const std::vector<double> v{1, 4};
  const std::vector<double> w{3, 1};
  const std::vector<double> fit = IsotonicNonIncreasing(v, w);
  EXPECT_DOUBLE_EQ(fit[0], 1.75);
  EXPECT_DOUBLE_EQ(fit[1], 1.75);
}

TEST(ConvexMinorant, LowerHull) {
  const std::vector<double> y{0, 0, 0.15, 0.15, 0.5};
  const std::vector<double> hull = ConvexMinorant(y);
  const std::vector<double> expected{0, 0, 0.075, 0.15, 0.5};
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(hull[i], expected[i], 1e-12);
}

TEST(FitPenalty, ConstantQualityGivesZero) {
  std::vector<QualityPoint> pts;
  for (std::size_t s = 0; s <= 6; ++s) pts.push_back({s, 0.7});
  const PenaltyCurve c = FitPenalty(pts, 6);
  EXPECT_EQ(c.theta, std::vector<double>(7, 0.0));
}

TEST(FitPenalty, LinearDecline) {
  std::vector<QualityPoint> pts;
  for (std::size_t s = 0; s <= 5; ++s) pts.push_back({s, 1.0 - 0.1 * s});
  const PenaltyCurve c = FitPenalty(pts, 5);
  for (std::size_t s = 0; s <= 5; ++s) EXPECT_NEAR(c.theta[s], 0.1 * s, 1e-12);
}

TEST(FitPenalty, HumpHandWorked) {
  const std::vector<double> q{0.5, 0.8, 0.6, 0.7, 0.3};
  std::vector<QualityPoint> pts;
  for (std::size_t s = 0; s < q.size(); ++s) pts.push_back({s, q[s]});
  const PenaltyCurve c = FitPenalty(pts, 4);
  const std::vector<double> expected{0, 0, 0.075, 0.15, 0.5};
  ASSERT_EQ(c.theta.size(), 5u);
  for (std::size_t s = 0; s < 5; ++s) EXPECT_NEAR(c.theta[s], expected[s], 1e-12);
  EXPECT_TRUE(c.IsValid());
}

TEST(FitPenalty, AveragesRepeatedSizesAndFillsGaps) {
  const std::vector<QualityPoint> pts{{0, 1.0}, {0, 0.8}, {4, 0.5}};
  const PenaltyCurve c = FitPenalty(pts, 6);
  ASSERT_EQ(c.theta.size(), 7u);
  // Mean 0.9 at size 0 and 0.5 at size 4; the flat tail is convexified
  // into one line from (0, 0) to (6, 0.4).
  for (std::size_t s = 0; s <= 6; ++s) {
    EXPECT_NEAR(c.theta[s], 0.4 * static_cast<double>(s) / 6.0, 1e-12);
  }
  EXPECT_TRUE(c.IsValid());
}

TEST(FitPenalty, Validation) {
  EXPECT_THROW(FitPenalty({}, 3), ConfigError);
  const std::vector<QualityPoint> big{{5, 1.0}};
  EXPECT_THROW(FitPenalty(big, 3), ConfigError);
}

TEST(FitPenalty, FuzzedInputsAlwaysValid) {
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 30;
    const std::size_t count = 1 + rng() % 40;
    std::uniform_real_distribution<double> q(-5.0, 5.0);
    std::vector<QualityPoint> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back({rng() % (n + 1), q(rng)});
    const PenaltyCurve c = FitPenalty(pts, n);
    ASSERT_EQ(c.theta.size(), n + 1);
    EXPECT_NO_THROW(c.Validate()) << t;
  }
}

}  // namespace
}  // namespace prunekit
