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

#include "prunekit/objectives.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

template <typename... Args>
[[noreturn]] void Fail(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw ConfigError(os.str());
}

bool IsIntegral(double x) { return std::floor(x) == x; }

void CheckElement(Element e, std::size_t n) {
  if (e < 0 || static_cast<std::size_t>(e) >= n) {
    Fail("element id ", e, " out of range [0, ", n, ")");
  }
}

void CheckSet(std::span<const Element> set, std::size_t n) {
  for (Element e : set) CheckElement(e, n);
  if (std::adjacent_find(set.begin(), set.end(), std::greater_equal<>()) ==
      set.end()) {
    return;  // strictly increasing
  }
  ElementSet copy(set.begin(), set.end());
  std::sort(copy.begin(), copy.end());
  auto dup = std::adjacent_find(copy.begin(), copy.end());
  if (dup != copy.end()) Fail("element id ", *dup, " repeated in set");
}

void CheckMatrix(const Matrix& m, const char* what) {
  if (m.data.size() != m.rows * m.cols) {
    Fail(what, ": matrix storage does not match ", m.rows, "x", m.cols);
  }
  for (double x : m.data) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      Fail(what, ": entries must be finite and non-negative");
    }
  }
}

void CheckCovers(const std::vector<std::vector<std::int32_t>>& covers,
                 std::size_t universe, const char* what) {
  for (std::size_t e = 0; e < covers.size(); ++e) {
    for (std::int32_t item : covers[e]) {
      if (item < 0 || static_cast<std::size_t>(item) >= universe) {
        Fail(what, ": element ", e, " covers item ", item,
             " outside universe of size ", universe);
      }
    }
  }
}

// Re-evaluates the full set on every change.
class RecomputeCursor final : public Cursor {
 public:
  explicit RecomputeCursor(const SetFunction& f) : f_(f) {
    value_ = f_.Value(set_);
  }
  void Push(Element e) override {
    set_.push_back(e);
    value_ = f_.Value(set_);
  }
  void Pop() override {
    set_.pop_back();
    value_ = f_.Value(set_);
  }
  double value() const override { return value_; }
  std::span<const Element> elements() const override { return set_; }

 private:
  const SetFunction& f_;
  std::vector<Element> set_;
  double value_ = 0.0;
};

// Keeps a value per depth so Pop restores bit-identical values.
class StackedCursor : public Cursor {
 public:
  double value() const override { return values_.back(); }
  std::span<const Element> elements() const override { return set_; }

 protected:
  StackedCursor() { values_.push_back(0.0); }
  std::vector<Element> set_;
  std::vector<double> values_;
};

class CoverageCursor final : public StackedCursor {
 public:
  explicit CoverageCursor(const CoverageSpec& spec)
      : spec_(spec), counts_(spec.weights.size(), 0) {}

  void Push(Element e) override {
    double v = values_.back();
    for (std::int32_t item : spec_.covers[e]) {
      if (counts_[item]++ == 0) v += spec_.weights[item];
    }
    set_.push_back(e);
    values_.push_back(v);
  }
  void Pop() override {
    Element e = set_.back();
    for (std::int32_t item : spec_.covers[e]) --counts_[item];
    set_.pop_back();
    values_.pop_back();
  }

 private:
  const CoverageSpec& spec_;
  std::vector<int> counts_;
};

class CutCursor final : public StackedCursor {
 public:
  explicit CutCursor(const CutFunction& f) : f_(f), in_(f.size(), 0) {}

  void Push(Element u) override {
    double v = values_.back();
    for (const auto& nb : f_.neighbors(u)) {
      v += in_[nb.v] ? -nb.weight : nb.weight;
    }
    in_[u] = 1;
    set_.push_back(u);
    values_.push_back(v);
  }
  void Pop() override {
    in_[set_.back()] = 0;
    set_.pop_back();
    values_.pop_back();
  }

 private:
  const CutFunction& f_;
  std::vector<char> in_;
};

class FacilityLocationCursor final : public StackedCursor {
 public:
  explicit FacilityLocationCursor(const FacilityLocationFunction& f)
      : f_(f), width_(f.active_rows().size()) {
    best_.assign(width_, 0.0);
  }

  void Push(Element e) override {
    const std::size_t base = best_.size() - width_;
    best_.resize(best_.size() + width_);
    const Matrix& sim = f_.sim();
    double total = 0.0;
    std::size_t i = 0;
    for (std::size_t r : f_.active_rows()) {
      const double b = std::max(best_[base + i], sim.at(r, e));
      best_[base + width_ + i] = b;
      total += b;
      ++i;
    }
    set_.push_back(e);
    values_.push_back(total);
  }
  void Pop() override {
    best_.resize(best_.size() - width_);
    set_.pop_back();
    values_.pop_back();
  }

 private:
  const FacilityLocationFunction& f_;
  std::size_t width_;
  std::vector<double> best_;  // stacked per-depth row maxima
};

class ProxyCursor final : public Cursor {
 public:
  explicit ProxyCursor(const ProxyFunction& f)
      : f_(f), fl_(f.fl().NewCursor()) {}

  void Push(Element e) override { fl_->Push(e); }
  void Pop() override { fl_->Pop(); }
  double value() const override {
    return fl_->value() - f_.penalty().theta[fl_->elements().size()] +
           f_.shift_amount();
  }
  std::span<const Element> elements() const override {
    return fl_->elements();
  }

 private:
  const ProxyFunction& f_;
  std::unique_ptr<Cursor> fl_;
};

class InterferenceCursor final : public StackedCursor {
 public:
  explicit InterferenceCursor(const InterferenceCoverageFunction& f)
      : f_(f), counts_(f.spec().universe, 0), in_(f.size(), 0) {}

  void Push(Element e) override {
    double v = values_.back();
    for (std::int32_t item : f_.spec().covers[e]) {
      if (counts_[item]++ == 0) v += 1.0;
    }
    double penalty = 0.0;
    for (const auto& nb : f_.interference(e)) {
      if (in_[nb.v]) penalty += nb.intensity;
    }
    v -= f_.spec().lambda * penalty;
    in_[e] = 1;
    set_.push_back(e);
    values_.push_back(v);
  }
  void Pop() override {
    Element e = set_.back();
    for (std::int32_t item : f_.spec().covers[e]) --counts_[item];
    in_[e] = 0;
    set_.pop_back();
    values_.pop_back();
  }

 private:
  const InterferenceCoverageFunction& f_;
  std::vector<int> counts_;
  std::vector<char> in_;
};

}  // namespace

ElementSet Canonical(std::span<const Element> set) {
  ElementSet out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet Union(std::span<const Element> a, std::span<const Element> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet FullSet(std::size_t n) {
  ElementSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void EnumerateSubsets(const SetFunction& f, std::span<const Element> universe,
                      std::size_t max_size,
                      const std::function<void(const Cursor&)>& visit) {
  auto cursor = f.NewCursor();
  visit(*cursor);
  if (max_size == 0) return;
  // Explicit-stack DFS over strictly increasing index sequences.
  std::vector<std::size_t> next;
  next.push_back(0);
  while (!next.empty()) {
    std::size_t& i = next.back();
    if (i >= universe.size()) {
      next.pop_back();
      if (!next.empty()) cursor->Pop();
      continue;
    }
    const std::size_t chosen = i++;
    cursor->Push(universe[chosen]);
    visit(*cursor);
    if (next.size() < max_size) {
      next.push_back(chosen + 1);
    } else {
      cursor->Pop();
    }
  }
}

// --- PenaltyCurve ------------------------------------------------------------

void PenaltyCurve::Validate() const {
  if (theta.empty()) Fail("penalty curve is empty");
  if (std::abs(theta[0]) > kRealTolerance) {
    Fail("penalty curve must start at 0, got ", theta[0]);
  }
  for (std::size_t s = 0; s + 1 < theta.size(); ++s) {
    if (!std::isfinite(theta[s + 1])) Fail("penalty curve has non-finite entry");
    if (theta[s + 1] < theta[s] - kRealTolerance) {
      Fail("penalty curve decreases at size ", s + 1);
    }
    if (s + 2 < theta.size()) {
      const double d0 = theta[s + 1] - theta[s];
      const double d1 = theta[s + 2] - theta[s + 1];
      if (d1 < d0 - kRealTolerance) Fail("penalty curve not convex at size ", s + 1);
    }
  }
}

bool PenaltyCurve::IsValid() const {
  try {
    Validate();
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

CoverageSpec UnitCoverage(std::vector<std::vector<std::int32_t>> covers) {
  std::int32_t max_item = -1;
  for (const auto& c : covers) {
    for (std::int32_t item : c) max_item = std::max(max_item, item);
  }
  CoverageSpec spec;
  spec.covers = std::move(covers);
  spec.weights.assign(static_cast<std::size_t>(max_item + 1), 1.0);
  return spec;
}

CoverageSpec Modular(std::span<const double> weights) {
  CoverageSpec spec;
  spec.weights.assign(weights.begin(), weights.end());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    spec.covers.push_back({static_cast<std::int32_t>(i)});
  }
  return spec;
}

// --- SetFunction -------------------------------------------------------------

double SetFunction::Value(std::span<const Element> set) const {
  CheckSet(set, n_);
  return Evaluate(set);
}

double SetFunction::Marginal(Element e, std::span<const Element> set) const {
  CheckElement(e, n_);
  if (std::find(set.begin(), set.end(), e) != set.end()) {
    Fail("marginal of element ", e, " already in set");
  }
  ElementSet with(set.begin(), set.end());
  with.push_back(e);
  return Value(with) - Value(set);
}

std::unique_ptr<Cursor> SetFunction::NewCursor() const {
  return std::make_unique<RecomputeCursor>(*this);
}

// --- Coverage ----------------------------------------------------------------

CoverageFunction::CoverageFunction(CoverageSpec spec)
    : SetFunction(spec.covers.size()), spec_(std::move(spec)) {
  if (spec_.covers.empty()) Fail("coverage: ground set must be non-empty");
  CheckCovers(spec_.covers, spec_.weights.size(), "coverage");
  for (double w : spec_.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      Fail("coverage: weights must be finite and non-negative");
    }
    integral_ = integral_ && IsIntegral(w);
  }
}

double CoverageFunction::Evaluate(std::span<const Element> set) const {
  std::vector<char> seen(spec_.weights.size(), 0);
  double total = 0.0;
  for (Element e : set) {
    for (std::int32_t item : spec_.covers[e]) {
      if (!seen[item]) {
        seen[item] = 1;
        total += spec_.weights[item];
      }
    }
  }
  return total;
}

std::unique_ptr<Cursor> CoverageFunction::NewCursor() const {
  return std::make_unique<CoverageCursor>(spec_);
}

// --- Cut ---------------------------------------------------------------------

CutFunction::CutFunction(CutSpec spec)
    : SetFunction(spec.graph.n), spec_(std::move(spec)) {
  const std::size_t n = spec_.graph.n;
  if (n == 0) Fail("cut: ground set must be non-empty");
  adj_.resize(n);
  for (const Edge& edge : spec_.graph.edges) {
    CheckElement(edge.u, n);
    CheckElement(edge.v, n);
    if (edge.u == edge.v) Fail("cut: self-loop at vertex ", edge.u);
    if (!(edge.weight >= 0.0) || !std::isfinite(edge.weight)) {
      Fail("cut: edge weights must be finite and non-negative");
    }
    unweighted_ = unweighted_ && edge.weight == 1.0;
    adj_[edge.u].push_back({edge.v, edge.weight});
    adj_[edge.v].push_back({edge.u, edge.weight});
  }
}

double CutFunction::Evaluate(std::span<const Element> set) const {
  std::vector<char> in(size(), 0);
  for (Element e : set) in[e] = 1;
  if (unweighted_) {
    std::int64_t count = 0;
    for (Element u : set) {
      for (const Neighbor& nb : adj_[u]) count += in[nb.v] ? 0 : 1;
    }
    return static_cast<double>(count);
  }
  double total = 0.0;
  for (Element u : set) {
    for (const Neighbor& nb : adj_[u]) {
      if (!in[nb.v]) total += nb.weight;
    }
  }
  return total;
}

std::unique_ptr<Cursor> CutFunction::NewCursor() const {
  return std::make_unique<CutCursor>(*this);
}

// --- Facility location -------------------------------------------------------

FacilityLocationFunction::FacilityLocationFunction(FacilityLocationSpec spec)
    : FacilityLocationFunction(spec.sim, std::vector<char>(spec.sim.rows, 1)) {
}

FacilityLocationFunction::FacilityLocationFunction(Matrix sim,
                                                   std::vector<char> active)
    : SetFunction(sim.cols), sim_(std::move(sim)) {
  if (sim_.cols == 0 || sim_.rows == 0) {
    Fail("facility location: similarity matrix must be non-empty");
  }
  CheckMatrix(sim_, "facility location");
  if (active.size() != sim_.rows) Fail("facility location: bad row mask");
  for (std::size_t r = 0; r < sim_.rows; ++r) {
    if (active[r]) rows_.push_back(r);
  }
}

double FacilityLocationFunction::Evaluate(
    std::span<const Element> set) const {
  if (set.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t r : rows_) {
    double best = 0.0;
    for (Element e : set) best = std::max(best, sim_.at(r, e));
    total += best;
  }
  return total;
}

std::unique_ptr<Cursor> FacilityLocationFunction::NewCursor() const {
  return std::make_unique<FacilityLocationCursor>(*this);
}

// --- Proxy -------------------------------------------------------------------

ProxyFunction::ProxyFunction(ProxySpec spec)
    : SetFunction(spec.fl.sim.cols),
      fl_(std::move(spec.fl)),
      penalty_(std::move(spec.penalty)) {
  const std::size_t n = size();
  if (penalty_.theta.size() < n + 1) {
    Fail("proxy: penalty has ", penalty_.theta.size(),
         " entries, need at least n+1 = ", n + 1);
  }
  penalty_.Validate();
  const double full = fl_.Value(FullSet(n));
  const bool feasible = penalty_.theta[n] <= full + kRealTolerance;
  if (!spec.shift) {
    if (!feasible) {
      Fail("proxy: theta(n) = ", penalty_.theta[n], " exceeds FL(N) = ", full,
           "; enable shift to offset the objective");
    }
    return;
  }
  double lower = -penalty_.theta[n];
  if (n <= 20) {
    lower = 0.0;
    EnumerateSubsets(fl_, FullSet(n), n, [&](const Cursor& c) {
      lower = std::min(lower, c.value() - penalty_.theta[c.elements().size()]);
    });
  }
  shift_ = std::max(0.0, -lower);
}

double ProxyFunction::Evaluate(std::span<const Element> set) const {
  return fl_.Value(set) - penalty_.theta[set.size()] + shift_;
}

std::unique_ptr<Cursor> ProxyFunction::NewCursor() const {
  return std::make_unique<ProxyCursor>(*this);
}

// --- Restricted FL -----------------------------------------------------------

namespace {

std::vector<char> RelevanceMask(const RestrictedFLSpec& spec) {
  if (spec.rel.size() != spec.sim.rows) {
    Fail("restricted FL: relevance vector has ", spec.rel.size(),
         " entries, expected ", spec.sim.rows);
  }
  std::vector<char> mask(spec.rel.size());
  for (std::size_t r = 0; r < spec.rel.size(); ++r) {
    if (!std::isfinite(spec.rel[r])) Fail("restricted FL: non-finite relevance");
    mask[r] = spec.rel[r] > spec.tau ? 1 : 0;
  }
  return mask;
}

}  // namespace

RestrictedFacilityLocationFunction::RestrictedFacilityLocationFunction(
    RestrictedFLSpec spec)
    : SetFunction(spec.sim.cols),
      fl_(spec.sim, RelevanceMask(spec)),
      tau_(spec.tau) {}

double RestrictedFacilityLocationFunction::Evaluate(
    std::span<const Element> set) const {
  return fl_.Value(set);
}

// --- Interference coverage ---------------------------------------------------

InterferenceCoverageFunction::InterferenceCoverageFunction(
    InterferenceSpec spec)
    : SetFunction(spec.covers.size()), spec_(std::move(spec)) {
  const std::size_t n = size();
  if (n == 0) Fail("interference: ground set must be non-empty");
  CheckCovers(spec_.covers, spec_.universe, "interference");
  if (!(spec_.lambda >= 0.0) || !std::isfinite(spec_.lambda)) {
    Fail("interference: lambda must be finite and non-negative");
  }
  adj_.resize(n);
  std::vector<InterferencePair> normalized;
  for (InterferencePair p : spec_.intf) {
    CheckElement(p.a, n);
    CheckElement(p.b, n);
    if (p.a == p.b) Fail("interference: non-zero diagonal at ", p.a);
    if (!(p.intensity >= 0.0) || !std::isfinite(p.intensity)) {
      Fail("interference: intensities must be finite and non-negative");
    }
    if (p.a > p.b) std::swap(p.a, p.b);
    normalized.push_back(p);
  }
  std::sort(normalized.begin(), normalized.end(),
            [](const auto& x, const auto& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  std::vector<InterferencePair> merged;
  for (const auto& p : normalized) {
    if (!merged.empty() && merged.back().a == p.a && merged.back().b == p.b) {
      if (std::abs(merged.back().intensity - p.intensity) > kRealTolerance) {
        Fail("interference: asymmetric intensity for pair (", p.a, ", ", p.b,
             ")");
      }
      continue;
    }
    merged.push_back(p);
  }
  spec_.intf = std::move(merged);
  for (const auto& p : spec_.intf) {
    adj_[p.a].push_back({p.b, p.intensity});
    adj_[p.b].push_back({p.a, p.intensity});
  }
}

double InterferenceCoverageFunction::Evaluate(
    std::span<const Element> set) const {
  std::vector<char> seen(spec_.universe, 0);
  std::vector<char> in(size(), 0);
  std::int64_t covered = 0;
  for (Element e : set) {
    in[e] = 1;
    for (std::int32_t item : spec_.covers[e]) {
      if (!seen[item]) {
        seen[item] = 1;
        ++covered;
      }
    }
  }
  double penalty = 0.0;
  for (Element e : set) {
    for (const Neighbor& nb : adj_[e]) {
      if (nb.v > e && in[nb.v]) penalty += nb.intensity;
    }
  }
  return static_cast<double>(covered) - spec_.lambda * penalty;
}

std::unique_ptr<Cursor> InterferenceCoverageFunction::NewCursor() const {
  return std::make_unique<InterferenceCursor>(*this);
}

// --- Table -------------------------------------------------------------------

TableFunction::TableFunction(std::size_t n, std::vector<double> values)
    : SetFunction(n), values_(std::move(values)) {
  if (n == 0 || n > 24) Fail("table: n must lie in [1, 24], got ", n);
  if (values_.size() != (std::size_t{1} << n)) {
    Fail("table: expected ", std::size_t{1} << n, " values, got ",
         values_.size());
  }
}

TableFunction TableFunction::FromCallable(
    std::size_t n, const std::function<double(std::span<const Element>)>& f) {
  if (n == 0 || n > 24) Fail("table: n must lie in [1, 24], got ", n);
  std::vector<double> values(std::size_t{1} << n);
  ElementSet set;
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    set.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) set.push_back(static_cast<Element>(i));
    }
    values[mask] = f(set);
  }
  return TableFunction(n, std::move(values));
}

double TableFunction::Evaluate(std::span<const Element> set) const {
  std::size_t mask = 0;
  for (Element e : set) mask |= std::size_t{1} << e;
  return values_[mask];
}

// --- Factory -----------------------------------------------------------------

std::unique_ptr<SetFunction> MakeObjective(const ObjectiveSpec& spec) {
  return std::visit(
      [](const auto& payload) -> std::unique_ptr<SetFunction> {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, CoverageSpec>) {
          return std::make_unique<CoverageFunction>(payload);
        } else if constexpr (std::is_same_v<T, CutSpec>) {
          return std::make_unique<CutFunction>(payload);
        } else if constexpr (std::is_same_v<T, FacilityLocationSpec>) {
          return std::make_unique<FacilityLocationFunction>(payload);
        } else if constexpr (std::is_same_v<T, ProxySpec>) {
          return std::make_unique<ProxyFunction>(payload);
        } else if constexpr (std::is_same_v<T, RestrictedFLSpec>) {
          return std::make_unique<RestrictedFacilityLocationFunction>(payload);
        } else {
          return std::make_unique<InterferenceCoverageFunction>(payload);
        }
      },
      spec);
}

std::string ObjectiveKind(const ObjectiveSpec& spec) {
  static constexpr const char* kNames[] = {
      "coverage", "cut", "facility_location", "proxy", "restricted_fl",
      "interference"};
  return kNames[spec.index()];
}

}  // namespace prunekit
