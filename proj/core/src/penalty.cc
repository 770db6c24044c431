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

#include "prunekit/penalty.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "prunekit/errors.h"

namespace prunekit {

std::vector<double> IsotonicNonIncreasing(std::span<const double> values,
                                          std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw ConfigError("isotonic: values and weights differ in length");
  }
  struct Block {
    double mean;
    double weight;
    std::size_t count;
  };
  std::vector<Block> stack;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] > 0.0)) throw ConfigError("isotonic: weights must be > 0");
    stack.push_back({values[i], weights[i], 1});
    // Non-increasing: merge while a later block rises above its predecessor.
    while (stack.size() > 1 &&
           stack[stack.size() - 1].mean > stack[stack.size() - 2].mean) {
      const Block top = stack.back();
      stack.pop_back();
      Block& prev = stack.back();
      const double w = prev.weight + top.weight;
      prev.mean = (prev.mean * prev.weight + top.mean * top.weight) / w;
      prev.weight = w;
      prev.count += top.count;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const Block& b : stack) out.insert(out.end(), b.count, b.mean);
  return out;
}

std::vector<double> ConvexMinorant(std::span<const double> y) {
  const std::size_t n = y.size();
  if (n <= 2) return {y.begin(), y.end()};
  // Lower hull by the monotone chain.
  std::vector<std::size_t> hull;
  const auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    const double ax = static_cast<double>(a) - static_cast<double>(o);
    const double bx = static_cast<double>(b) - static_cast<double>(o);
    return ax * (y[b] - y[o]) - (y[a] - y[o]) * bx;
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), i) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }
  std::vector<double> out(n);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t a = hull[h];
    const std::size_t b = hull[h + 1];
    const double slope = (y[b] - y[a]) / static_cast<double>(b - a);
    for (std::size_t i = a; i <= b; ++i) {
      out[i] = y[a] + slope * static_cast<double>(i - a);
    }
  }
  return out;
}

PenaltyCurve FitPenalty(std::span<const QualityPoint> points, std::size_t n) {
  if (points.empty()) throw ConfigError("fit_penalty: no points");
  std::map<std::size_t, std::pair<double, double>> acc;  // size -> (sum, count)
  for (const QualityPoint& p : points) {
    if (p.size > n) throw ConfigError("fit_penalty: size exceeds n");
    if (!std::isfinite(p.quality)) {
      throw ConfigError("fit_penalty: quality must be finite");
    }
    auto& [sum, count] = acc[p.size];
    sum += p.quality;
    count += 1.0;
  }
  std::vector<std::size_t> sizes;
  std::vector<double> means;
  std::vector<double> counts;
  for (const auto& [s, sc] : acc) {
    sizes.push_back(s);
    means.push_back(sc.first / sc.second);
    counts.push_back(sc.second);
  }
  // Raw peak; earliest size wins ties.
  const std::size_t peak_idx = static_cast<std::size_t>(
      std::max_element(means.begin(), means.end()) - means.begin());
  const std::size_t peak = sizes[peak_idx];

  const std::vector<double> fitted = IsotonicNonIncreasing(
      std::span<const double>(means).subspan(peak_idx),
      std::span<const double>(counts).subspan(peak_idx));
  const double top = fitted.front();

  std::vector<double> theta(n + 1, 0.0);
  for (std::size_t j = 0; j < fitted.size(); ++j) {
    const std::size_t s = sizes[peak_idx + j];
    theta[s] = top - fitted[j];
    if (j + 1 < fitted.size()) {
      const std::size_t t = sizes[peak_idx + j + 1];
      const double next = top - fitted[j + 1];
      for (std::size_t u = s + 1; u < t; ++u) {
        const double frac =
            static_cast<double>(u - s) / static_cast<double>(t - s);
        theta[u] = theta[s] + frac * (next - theta[s]);
      }
    } else {
      for (std::size_t u = s + 1; u <= n; ++u) theta[u] = theta[s];
    }
  }
  for (std::size_t s = 0; s <= peak; ++s) theta[s] = 0.0;

  // Convexify, then rebuild from clamped increments so the invariants hold
  // exactly in floating point.
  const std::vector<double> hull = ConvexMinorant(theta);
  PenaltyCurve curve;
  curve.theta.assign(n + 1, 0.0);
  double slope = 0.0;
  for (std::size_t s = 1; s <= n; ++s) {
    slope = std::max(slope, hull[s] - hull[s - 1]);
    curve.theta[s] = curve.theta[s - 1] + slope;
  }
  return curve;
}

}  // namespace prunekit
