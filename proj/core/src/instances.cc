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

#include "prunekit/instances.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(what) + " must lie in [0, 1]");
  }
}

// k distinct values from [0, m), sorted.
std::vector<std::int32_t> Sample(std::size_t m, std::size_t k,
                                 std::mt19937_64& rng) {
  std::vector<std::int32_t> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, m - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<std::int32_t>> RandomCovers(std::size_t n,
                                                    std::size_t universe,
                                                    std::size_t lo,
                                                    std::size_t hi,
                                                    std::mt19937_64& rng) {
  if (lo > hi || hi > universe) {
    throw ConfigError("cover sizes must satisfy min <= max <= universe");
  }
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::vector<std::vector<std::int32_t>> covers;
  covers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    covers.push_back(Sample(universe, size(rng), rng));
  }
  return covers;
}

}  // namespace

Graph GenerateGnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) {
    throw ConfigError("gnm: m must lie in [0, n(n-1)/2]");
  }
  std::mt19937_64 rng(seed);
  Graph g{n, {}};
  // Sample m distinct pair indices. Dense requests use a partial shuffle.
  std::vector<std::size_t> chosen;
  if (2 * m > pairs) {
    std::vector<std::size_t> all(pairs);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pairs - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    chosen.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    std::set<std::size_t> seen;
    std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
    while (chosen.size() < m) {
      const std::size_t idx = pick(rng);
      if (seen.insert(idx).second) chosen.push_back(idx);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  // Decode index -> (u, v) with u < v in row-major order.
  std::size_t base = 0;
  Element u = 0;
  for (std::size_t idx : chosen) {
    while (idx >= base + (n - 1 - static_cast<std::size_t>(u))) {
      base += n - 1 - static_cast<std::size_t>(u);
      ++u;
    }
    const auto v = static_cast<Element>(static_cast<std::size_t>(u) + 1 +
                                        (idx - base));
    g.edges.push_back({u, v, 1.0});
  }
  return g;
}

Graph GeneratePlanted(std::size_t n, std::size_t blocks, double p_in,
                      double p_out, std::uint64_t seed, BlockMode mode) {
  CheckProbability(p_in, "planted: p_in");
  CheckProbability(p_out, "planted: p_out");
  if (blocks == 0) throw ConfigError("planted: block parameter must be >= 1");
  std::size_t count = blocks;
  std::size_t width = 0;
  if (mode == BlockMode::kCount) {
    count = std::min(blocks, std::max<std::size_t>(n, 1));
    width = n / count;
  } else {
    width = std::min(blocks, std::max<std::size_t>(n, 1));
    count = std::max<std::size_t>(n / width, 1);
  }
  // The last block absorbs the remainder.
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) {
    label[i] = width == 0 ? 0 : std::min(i / width, count - 1);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g{n, {}};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = label[u] == label[v] ? p_in : p_out;
      if (coin(rng) < p) {
        g.edges.push_back(
            {static_cast<Element>(u), static_cast<Element>(v), 1.0});
      }
    }
  }
  return g;
}

InterferenceSpec GenerateInterference(std::size_t n, std::size_t universe,
                                      std::uint64_t seed,
                                      const InterferenceParams& params) {
  CheckProbability(params.pair_probability, "interference: pair probability");
  if (params.intensity_lo < 0.0 || params.intensity_hi < params.intensity_lo ||
      params.lambda_lo < 0.0 || params.lambda_hi < params.lambda_lo) {
    throw ConfigError("interference: invalid intensity or lambda range");
  }
  std::mt19937_64 rng(seed);
  InterferenceSpec spec;
  spec.universe = universe;
  spec.covers =
      RandomCovers(n, universe, params.min_cover, params.max_cover, rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> intensity(params.intensity_lo,
                                                   params.intensity_hi);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng) < params.pair_probability) {
        spec.intf.push_back({static_cast<Element>(a), static_cast<Element>(b),
                             intensity(rng)});
      }
    }
  }
  spec.lambda =
      std::uniform_real_distribution<double>(params.lambda_lo,
                                             params.lambda_hi)(rng);
  return spec;
}

CoverageSpec GenerateCoverage(std::size_t n, std::size_t universe,
                              std::size_t min_cover, std::size_t max_cover,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CoverageSpec spec =
      UnitCoverage(RandomCovers(n, universe, min_cover, max_cover, rng));
  spec.weights.assign(universe, 1.0);
  return spec;
}

Matrix GenerateSimilarity(std::size_t rows, std::size_t n,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(rows, n);
  for (double& x : m.data) x = u(rng);
  return m;
}

std::string FamilyName(const GenSpec& spec) {
  struct Visitor {
    std::string operator()(const GnmGen&) const { return "gnm"; }
    std::string operator()(const PlantedGen&) const { return "planted"; }
    std::string operator()(const InterferenceGen&) const {
      return "interference";
    }
    std::string operator()(const SimilarityGen&) const { return "similarity"; }
    std::string operator()(const CoverageGen&) const { return "coverage"; }
  };
  return std::visit(Visitor{}, spec);
}

ObjectiveSpec Generate(const GenSpec& spec, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    ObjectiveSpec operator()(const GnmGen& g) const {
      return CutSpec{GenerateGnm(g.n, g.m, seed)};
    }
    ObjectiveSpec operator()(const PlantedGen& g) const {
      return CutSpec{
          GeneratePlanted(g.n, g.blocks, g.p_in, g.p_out, seed, g.mode)};
    }
    ObjectiveSpec operator()(const InterferenceGen& g) const {
      return GenerateInterference(g.n, g.universe, seed, g.params);
    }
    ObjectiveSpec operator()(const SimilarityGen& g) const {
      return FacilityLocationSpec{GenerateSimilarity(g.rows, g.n, seed)};
    }
    ObjectiveSpec operator()(const CoverageGen& g) const {
      return GenerateCoverage(g.n, g.universe, g.min_cover, g.max_cover, seed);
    }
  };
  return std::visit(Visitor{seed}, spec);
}

}  // namespace prunekit
