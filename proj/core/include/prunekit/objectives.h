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

// Set functions over a dense ground set {0, ..., n-1}.
//
// Every objective derives from SetFunction. Values are deterministic and the
// objects are immutable after construction, so a single instance can be
// evaluated concurrently from many threads. Integer-valued objectives
// (coverage with integral weights, unweighted cut) accumulate in exact
// integer arithmetic and compare with zero tolerance; all others use
// kRealTolerance.

#ifndef PRUNEKIT_OBJECTIVES_H_
#define PRUNEKIT_OBJECTIVES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace prunekit {

using Element = std::int32_t;
// Canonical set representation: strictly increasing element ids.
using ElementSet = std::vector<Element>;

inline constexpr double kRealTolerance = 1e-9;

// Returns `set` sorted and deduplicated.
ElementSet Canonical(std::span<const Element> set);
// Returns a ∪ b for canonical inputs.
ElementSet Union(std::span<const Element> a, std::span<const Element> b);
// Returns [0, n).
ElementSet FullSet(std::size_t n);

// Convex non-decreasing size penalty; theta[s] is the penalty at |S| = s.
struct PenaltyCurve {
  std::vector<double> theta;

  // Throws ConfigError unless theta[0] == 0, theta is non-decreasing and
  // its increments are non-decreasing (all within kRealTolerance).
  void Validate() const;
  bool IsValid() const;
  std::size_t max_size() const { return theta.empty() ? 0 : theta.size() - 1; }
};

// Dense row-major matrix of non-negative reals.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct Edge {
  Element u = 0;
  Element v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct InterferencePair {
  Element a = 0;
  Element b = 0;
  double intensity = 0.0;

  friend bool operator==(const InterferencePair&,
                         const InterferencePair&) = default;
};

// --- Objective payloads ----------------------------------------------------

// f(S) = sum of weights of universe items covered by some element of S.
struct CoverageSpec {
  std::vector<std::vector<std::int32_t>> covers;  // per element, items in [m)
  std::vector<double> weights;                    // size m
};

// f(S) = total weight of edges with exactly one endpoint in S.
struct CutSpec {
  Graph graph;
};

// f(S) = sum over rows v of max_{s in S} sim(v, s); f(empty) = 0.
struct FacilityLocationSpec {
  Matrix sim;  // rows = covered points, cols = elements
};

// f(S) = FL(S) - theta(|S|) (+ a constant shift when requested).
struct ProxySpec {
  FacilityLocationSpec fl;
  PenaltyCurve penalty;
  bool shift = false;
};

// FL restricted to rows whose relevance score exceeds `tau`.
struct RestrictedFLSpec {
  Matrix sim;
  std::vector<double> rel;  // per row
  double tau = 0.0;
};

// f(S) = |union of covers| - lambda * sum_{i<j in S} intf(i, j).
struct InterferenceSpec {
  std::vector<std::vector<std::int32_t>> covers;
  std::size_t universe = 0;
  std::vector<InterferencePair> intf;
  double lambda = 0.0;
};

using ObjectiveSpec =
    std::variant<CoverageSpec, CutSpec, FacilityLocationSpec, ProxySpec,
                 RestrictedFLSpec, InterferenceSpec>;

// Unit-weight coverage; the universe is sized to the largest item id + 1.
CoverageSpec UnitCoverage(std::vector<std::vector<std::int32_t>> covers);
// Modular function with f({i}) = weights[i], encoded as disjoint coverage.
CoverageSpec Modular(std::span<const double> weights);

// --- Incremental evaluation ------------------------------------------------

// Stack-shaped incremental evaluator used by exhaustive enumeration. Push
// adds an element that is not already present; Pop removes the most recently
// pushed element.
class Cursor {
 public:
  virtual ~Cursor() = default;
  virtual void Push(Element e) = 0;
  virtual void Pop() = 0;
  virtual double value() const = 0;
  virtual std::span<const Element> elements() const = 0;
};

// --- SetFunction -----------------------------------------------------------

class SetFunction {
 public:
  virtual ~SetFunction() = default;
  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  std::size_t size() const { return n_; }

  // Throws ConfigError if an id is out of range or repeated.
  double Value(std::span<const Element> set) const;
  // f(set ∪ {e}) - f(set). Throws ConfigError if e is already in `set`.
  double Marginal(Element e, std::span<const Element> set) const;

  virtual bool integer_valued() const { return false; }
  double tolerance() const { return integer_valued() ? 0.0 : kRealTolerance; }
  virtual std::string name() const = 0;

  // The default cursor re-evaluates the whole set on every change.
  virtual std::unique_ptr<Cursor> NewCursor() const;

 protected:
  explicit SetFunction(std::size_t n) : n_(n) {}

  // `set` holds distinct in-range ids in arbitrary order.
  virtual double Evaluate(std::span<const Element> set) const = 0;

 private:
  std::size_t n_;
};

class CoverageFunction final : public SetFunction {
 public:
  explicit CoverageFunction(CoverageSpec spec);

  bool integer_valued() const override { return integral_; }
  std::string name() const override { return "coverage"; }
  std::unique_ptr<Cursor> NewCursor() const override;
  const CoverageSpec& spec() const { return spec_; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  CoverageSpec spec_;
  bool integral_ = true;
};

class CutFunction final : public SetFunction {
 public:
  explicit CutFunction(CutSpec spec);

  bool integer_valued() const override { return unweighted_; }
  std::string name() const override { return "cut"; }
  std::unique_ptr<Cursor> NewCursor() const override;
  const CutSpec& spec() const { return spec_; }

  struct Neighbor {
    Element v;
    double weight;
  };
  std::span<const Neighbor> neighbors(Element u) const { return adj_[u]; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  CutSpec spec_;
  std::vector<std::vector<Neighbor>> adj_;
  bool unweighted_ = true;
};

class FacilityLocationFunction final : public SetFunction {
 public:
  explicit FacilityLocationFunction(FacilityLocationSpec spec);
  // Only rows with active[r] != 0 contribute.
  FacilityLocationFunction(Matrix sim, std::vector<char> active);

  std::string name() const override { return "facility_location"; }
  std::unique_ptr<Cursor> NewCursor() const override;
  const Matrix& sim() const { return sim_; }
  std::span<const std::size_t> active_rows() const { return rows_; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  Matrix sim_;
  std::vector<std::size_t> rows_;
};

// FL(S) - theta(|S|) + shift. Construction verifies theta(n) <= FL(N); when
// that fails and `shift` is false it throws ConfigError. With `shift` set the
// constant max(0, -L) is added, where L is the exact minimum of
// FL(S) - theta(|S|) for n <= 20 and -theta(n) otherwise.
class ProxyFunction final : public SetFunction {
 public:
  explicit ProxyFunction(ProxySpec spec);

  std::string name() const override { return "proxy"; }
  std::unique_ptr<Cursor> NewCursor() const override;
  double shift_amount() const { return shift_; }
  const PenaltyCurve& penalty() const { return penalty_; }
  const FacilityLocationFunction& fl() const { return fl_; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  FacilityLocationFunction fl_;
  PenaltyCurve penalty_;
  double shift_ = 0.0;
};

class RestrictedFacilityLocationFunction final : public SetFunction {
 public:
  explicit RestrictedFacilityLocationFunction(RestrictedFLSpec spec);

  std::string name() const override { return "restricted_fl"; }
  std::unique_ptr<Cursor> NewCursor() const override {
    return fl_.NewCursor();
  }
  double tau() const { return tau_; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  FacilityLocationFunction fl_;
  double tau_;
};

class InterferenceCoverageFunction final : public SetFunction {
 public:
  explicit InterferenceCoverageFunction(InterferenceSpec spec);

  std::string name() const override { return "interference"; }
  std::unique_ptr<Cursor> NewCursor() const override;
  const InterferenceSpec& spec() const { return spec_; }

  struct Neighbor {
    Element v;
    double intensity;
  };
  std::span<const Neighbor> interference(Element u) const { return adj_[u]; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  InterferenceSpec spec_;
  std::vector<std::vector<Neighbor>> adj_;
};

// Explicit value table indexed by bitmask; n <= 24. Useful for hand-built
// counterexamples.
class TableFunction final : public SetFunction {
 public:
  TableFunction(std::size_t n, std::vector<double> values);
  static TableFunction FromCallable(
      std::size_t n, const std::function<double(std::span<const Element>)>& f);

  std::string name() const override { return "table"; }

 protected:
  double Evaluate(std::span<const Element> set) const override;

 private:
  std::vector<double> values_;
};

// Visits every subset of `universe` (canonical) with at most `max_size`
// elements, in lexicographic order starting from the empty set. The cursor
// passed to `visit` holds the current subset and its value.
void EnumerateSubsets(const SetFunction& f, std::span<const Element> universe,
                      std::size_t max_size,
                      const std::function<void(const Cursor&)>& visit);

// Validates `spec` and builds the matching SetFunction.
std::unique_ptr<SetFunction> MakeObjective(const ObjectiveSpec& spec);

// Short tag for the payload ("coverage", "cut", ...).
std::string ObjectiveKind(const ObjectiveSpec& spec);

}  // namespace prunekit

#endif  // PRUNEKIT_OBJECTIVES_H_
