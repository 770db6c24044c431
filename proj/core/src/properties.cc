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

#include "prunekit/properties.h"

#include <algorithm>
#include <random>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

constexpr std::size_t kMaxExhaustiveN = 14;

ElementSet FromMask(std::uint32_t mask) {
  ElementSet out;
  for (Element i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

void Record(PropertyReport& report, double amount, PropertyViolation v) {
  ++report.violation_count;
  report.max_violation = std::max(report.max_violation, amount);
  if (report.violations.size() < PropertyReport::kMaxRecorded) {
    report.violations.push_back(std::move(v));
  }
}

std::vector<double> ValueTable(const SetFunction& f) {
  const std::size_t n = f.size();
  if (n > kMaxExhaustiveN) {
    throw ConfigError("exhaustive property check supports n <= 14");
  }
  std::vector<double> table(std::size_t{1} << n);
  EnumerateSubsets(f, FullSet(n), n, [&](const Cursor& c) {
    std::uint32_t mask = 0;
    for (Element e : c.elements()) mask |= 1u << e;
    table[mask] = c.value();
  });
  return table;
}

void CheckTrials(std::size_t trials) {
  if (trials < 1) throw ConfigError("property check needs at least one trial");
}

}  // namespace

PropertyReport CheckSubmodular(const SetFunction& f, std::size_t trials,
                               std::uint64_t seed) {
  CheckTrials(trials);
  PropertyReport report;
  report.property = "submodular";
  const std::size_t n = f.size();
  if (n < 1) return report;
  const double tol = f.tolerance();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < trials; ++t) {
    const Element x = pick(rng);
    ElementSet a, b;
    for (Element y = 0; y < static_cast<Element>(n); ++y) {
      if (y == x || !coin(rng)) continue;
      b.push_back(y);
      if (coin(rng)) a.push_back(y);
    }
    const double gain_a = f.Marginal(x, a);
    const double gain_b = f.Marginal(x, b);
    ++report.checked;
    if (gain_a < gain_b - tol) {
      Record(report, gain_b - gain_a, {a, b, x, gain_a, gain_b});
    }
  }
  return report;
}

PropertyReport CheckMonotone(const SetFunction& f, std::size_t trials,
                             std::uint64_t seed) {
  CheckTrials(trials);
  PropertyReport report;
  report.property = "monotone";
  const std::size_t n = f.size();
  const double tol = f.tolerance();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < trials; ++t) {
    ElementSet a, b;
    for (Element y = 0; y < static_cast<Element>(n); ++y) {
      if (!coin(rng)) continue;
      b.push_back(y);
      if (coin(rng)) a.push_back(y);
    }
    const double fa = f.Value(a);
    const double fb = f.Value(b);
    ++report.checked;
    if (fa > fb + tol) Record(report, fa - fb, {a, b, -1, fa, fb});
  }
  return report;
}

PropertyReport CheckSubmodularExhaustive(const SetFunction& f) {
  PropertyReport report;
  report.property = "submodular";
  report.exhaustive = true;
  const std::vector<double> table = ValueTable(f);
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const std::uint32_t full = (1u << n) - 1;
  const double tol = f.tolerance();
  for (std::uint32_t b = 0; b <= full; ++b) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t bit = 1u << x;
      if (b & bit) continue;
      const double gain_b = table[b | bit] - table[b];
      // Every submask A of B, including B itself and the empty set.
      for (std::uint32_t a = b;; a = (a - 1) & b) {
        const double gain_a = table[a | bit] - table[a];
        ++report.checked;
        if (gain_a < gain_b - tol) {
          Record(report, gain_b - gain_a,
                 {FromMask(a), FromMask(b), static_cast<Element>(x), gain_a,
                  gain_b});
        }
        if (a == 0) break;
      }
    }
  }
  return report;
}

PropertyReport CheckMonotoneExhaustive(const SetFunction& f) {
  PropertyReport report;
  report.property = "monotone";
  report.exhaustive = true;
  const std::vector<double> table = ValueTable(f);
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const std::uint32_t full = (1u << n) - 1;
  const double tol = f.tolerance();
  // Single-element extensions suffice: a chain of non-decreasing steps
  // connects every nested pair.
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t bit = 1u << x;
      if (a & bit) continue;
      ++report.checked;
      const double fa = table[a];
      const double fb = table[a | bit];
      if (fa > fb + tol) {
        Record(report, fa - fb, {FromMask(a), FromMask(a | bit), -1, fa, fb});
      }
    }
  }
  return report;
}

}  // namespace prunekit
