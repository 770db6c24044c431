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

// Randomized and exhaustive checkers for submodularity and monotonicity.

#ifndef PRUNEKIT_PROPERTIES_H_
#define PRUNEKIT_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prunekit/objectives.h"

namespace prunekit {

struct PropertyViolation {
  ElementSet a;
  ElementSet b;
  Element x = -1;  // -1 for monotonicity violations
  // Submodularity: lhs = f(x|A), rhs = f(x|B).
  // Monotonicity:  lhs = f(A),   rhs = f(B).
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  std::string property;  // "submodular" or "monotone"
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  double max_violation = 0.0;
  // The first kMaxRecorded violations found.
  std::vector<PropertyViolation> violations;

  static constexpr std::size_t kMaxRecorded = 32;
  bool passed() const { return violation_count == 0; }
};

// Samples `trials` triples (A ⊆ B, x ∉ B) and flags f(x|A) < f(x|B) - tol,
// where tol is 0 for integer-valued objectives and kRealTolerance otherwise.
PropertyReport CheckSubmodular(const SetFunction& f, std::size_t trials,
                               std::uint64_t seed);
// Samples `trials` nested pairs A ⊆ B and flags f(A) > f(B) + tol.
PropertyReport CheckMonotone(const SetFunction& f, std::size_t trials,
                             std::uint64_t seed);

// Exhaustive versions over every triple / pair; n <= 14.
PropertyReport CheckSubmodularExhaustive(const SetFunction& f);
PropertyReport CheckMonotoneExhaustive(const SetFunction& f);

}  // namespace prunekit

#endif  // PRUNEKIT_PROPERTIES_H_
