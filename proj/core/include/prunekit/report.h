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

// Serialization of specs and results. Every function returns a single-line
// JSON document (or CSV text). Wall-clock fields are emitted only when
// `timing` is true, so report bodies are reproducible byte for byte.

#ifndef PRUNEKIT_REPORT_H_
#define PRUNEKIT_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "prunekit/harness.h"
#include "prunekit/instances.h"
#include "prunekit/knapsack.h"
#include "prunekit/objectives.h"
#include "prunekit/properties.h"
#include "prunekit/prune.h"

namespace prunekit {

inline constexpr std::string_view kSchemaVersion = "prunekit.report/1";

// {"kind": ..., payload}. Kinds: coverage, cut, facility_location, proxy,
// restricted_fl, interference.
std::string ObjectiveToJson(const ObjectiveSpec& spec);
// Throws ParseError on malformed documents.
ObjectiveSpec ObjectiveFromJson(std::string_view text,
                                const std::string& source = "<input>");

std::string GenSpecToJson(const GenSpec& spec, std::uint64_t seed);

std::string PruneParamsToJson(const PruneParams& params);
std::string PrunedSetToJson(const PrunedSet& pruned, bool timing);
// Restores everything PrunedSetToJson writes except timing.
PrunedSet PrunedSetFromJson(std::string_view text,
                            const std::string& source = "<input>");

std::string KnapsackPrunedSetToJson(const KnapsackPrunedSet& pruned,
                                    bool timing);
std::string ContainmentToJson(const ContainmentReport& report, bool timing);
std::string SweepRowToJson(const SweepRow& row, bool timing);
std::string SweepCellToJson(const SweepCell& cell);
std::string PropertyReportToJson(const PropertyReport& report);
std::string SeparationToJson(const SeparationConfig& config,
                             const SeparationResult& result);

// Containment table: one line per (family, instance, algorithm, omega) cell.
std::string SweepCsv(const SweepResult& result);
// Separation table: header plus one line.
std::string SeparationCsv(const SeparationConfig& config,
                          const SeparationResult& result);

}  // namespace prunekit

#endif  // PRUNEKIT_REPORT_H_
