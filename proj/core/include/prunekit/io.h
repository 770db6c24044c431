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

// Text formats for instances. Parsers throw ParseError carrying the 1-based
// line number of the offending line; writers produce input the parsers
// read back to an identical structure.
//
//   edge list    "u v [w]" per line, 0-indexed, '#' comments. A "# nodes N"
//                comment fixes the vertex count (else max id + 1).
//   coverage     "elem: item item ...", '#' comments. "# universe M" fixes
//                the item count (else max item + 1). Unit weights.
//   similarity   dense CSV, one row per covered point, >= 1 row, rectangular,
//                non-negative.
//   costs        "id,cost" per line, ids 0..n-1 each exactly once, cost > 0.
//                An optional "id,cost" header line is skipped.
//   penalty      "size,theta" per line, sizes 0..n each exactly once.
//                An optional "size,theta" header line is skipped.

#ifndef PRUNEKIT_IO_H_
#define PRUNEKIT_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "prunekit/objectives.h"

namespace prunekit {

Graph ParseEdgeList(std::istream& in, const std::string& source = "<input>");
CoverageSpec ParseCoverageList(std::istream& in,
                               const std::string& source = "<input>");
Matrix ParseSimilarityCsv(std::istream& in,
                          const std::string& source = "<input>");
std::vector<double> ParseCostsCsv(std::istream& in,
                                  const std::string& source = "<input>");
PenaltyCurve ParsePenaltyCsv(std::istream& in,
                             const std::string& source = "<input>");

// File variants; a missing file is a ParseError with line 0.
Graph LoadEdgeList(const std::string& path);
CoverageSpec LoadCoverageList(const std::string& path);
Matrix LoadSimilarityCsv(const std::string& path);
std::vector<double> LoadCostsCsv(const std::string& path);
PenaltyCurve LoadPenaltyCsv(const std::string& path);

void WriteEdgeList(std::ostream& out, const Graph& graph);
void WriteCoverageList(std::ostream& out, const CoverageSpec& spec);
void WriteSimilarityCsv(std::ostream& out, const Matrix& sim);
void WriteCostsCsv(std::ostream& out, const std::vector<double>& costs);
void WritePenaltyCsv(std::ostream& out, const PenaltyCurve& curve);

// Reads a whole file; ParseError with line 0 if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace prunekit

#endif  // PRUNEKIT_IO_H_
