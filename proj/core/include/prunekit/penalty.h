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

// Size-penalty fitting for the proxy objective.

#ifndef PRUNEKIT_PENALTY_H_
#define PRUNEKIT_PENALTY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "prunekit/objectives.h"

namespace prunekit {

struct QualityPoint {
  std::size_t size = 0;
  double quality = 0.0;
};

// Weighted pool-adjacent-violators fit of a non-increasing sequence.
// Returns one fitted value per input value.
std::vector<double> IsotonicNonIncreasing(std::span<const double> values,
                                          std::span<const double> weights);

// Greatest convex minorant of (i, y[i]) on the integer grid 0..y.size()-1.
std::vector<double> ConvexMinorant(std::span<const double> y);

// Fits θ on sizes 0..n from observed (size, quality) points:
//   1. mean quality per observed size;
//   2. non-increasing isotonic fit on sizes at or after the raw peak;
//   3. θ(s) = q*(peak) - q*(s) after the peak and 0 up to it, with gaps
//      interpolated linearly and the tail held flat;
//   4. the greatest convex minorant of θ.
// The result always passes PenaltyCurve::Validate. Throws ConfigError on
// empty input or sizes above n.
PenaltyCurve FitPenalty(std::span<const QualityPoint> points, std::size_t n);

}  // namespace prunekit

#endif  // PRUNEKIT_PENALTY_H_
