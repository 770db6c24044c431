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

// Seeded instance generators. Every generator is a pure function of its
// parameters and seed.

#ifndef PRUNEKIT_INSTANCES_H_
#define PRUNEKIT_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "prunekit/objectives.h"

namespace prunekit {

// Uniform simple graph with exactly m edges. Throws ConfigError unless
// 0 <= m <= n(n-1)/2.
Graph GenerateGnm(std::size_t n, std::size_t m, std::uint64_t seed);

enum class BlockMode {
  kCount,  // `blocks` is the number of communities
  kSize,   // `blocks` is the size of each community
};

// Planted partition: equal-size blocks (the last block absorbs any
// remainder), intra-block edges with probability p_in and inter-block edges
// with probability p_out.
Graph GeneratePlanted(std::size_t n, std::size_t blocks, double p_in,
                      double p_out, std::uint64_t seed,
                      BlockMode mode = BlockMode::kCount);

struct InterferenceParams {
  std::size_t min_cover = 3;
  std::size_t max_cover = 8;
  double pair_probability = 0.25;
  double intensity_lo = 1.0;
  double intensity_hi = 5.0;
  double lambda_lo = 0.5;
  double lambda_hi = 2.5;
};

// Interference coverage: each element covers a uniform random subset of [m)
// whose size is uniform on {min_cover..max_cover}; each pair interferes with
// probability pair_probability at intensity Unif(intensity_lo, intensity_hi);
// lambda ~ Unif(lambda_lo, lambda_hi). Requires universe >= max_cover.
InterferenceSpec GenerateInterference(std::size_t n, std::size_t universe,
                                      std::uint64_t seed,
                                      const InterferenceParams& params = {});

// Unit-weight coverage with per-element cover sizes uniform on
// {min_cover..max_cover}.
CoverageSpec GenerateCoverage(std::size_t n, std::size_t universe,
                              std::size_t min_cover, std::size_t max_cover,
                              std::uint64_t seed);

// rows x n similarity matrix with i.i.d. Unif[0, 1) entries.
Matrix GenerateSimilarity(std::size_t rows, std::size_t n, std::uint64_t seed);

// --- Generator specs -------------------------------------------------------

struct GnmGen {
  std::size_t n = 100;
  std::size_t m = 1000;
};

// Defaults are not taken from any published setting; reports label them as
// invented.
struct PlantedGen {
  std::size_t n = 200;
  std::size_t blocks = 20;
  double p_in = 0.3;
  double p_out = 0.05;
  BlockMode mode = BlockMode::kCount;
};

struct InterferenceGen {
  std::size_t n = 20;
  std::size_t universe = 30;
  InterferenceParams params;
};

struct SimilarityGen {
  std::size_t rows = 50;
  std::size_t n = 20;
};

struct CoverageGen {
  std::size_t n = 20;
  std::size_t universe = 40;
  std::size_t min_cover = 2;
  std::size_t max_cover = 8;
};

using GenSpec =
    std::variant<GnmGen, PlantedGen, InterferenceGen, SimilarityGen, CoverageGen>;

// "gnm", "planted", "interference", "similarity" or "coverage".
std::string FamilyName(const GenSpec& spec);

// Builds the objective for a generator spec: cut for graph families,
// interference coverage, facility location, or unit coverage.
ObjectiveSpec Generate(const GenSpec& spec, std::uint64_t seed);

}  // namespace prunekit

#endif  // PRUNEKIT_INSTANCES_H_
