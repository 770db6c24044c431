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

#include "prunekit/oracle.h"

#include <algorithm>
#include <cstring>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

std::uint64_t MaskKey(const ElementSet& set) {
  std::uint64_t mask = 0;
  for (Element e : set) mask |= std::uint64_t{1} << e;
  return mask;
}

std::string ListKey(const ElementSet& set) {
  std::string key(set.size() * sizeof(Element), '\0');
  if (!set.empty()) std::memcpy(key.data(), set.data(), key.size());
  return key;
}

}  // namespace

Oracle::Oracle(const SetFunction& f, bool memoize) : f_(f), memoize_(memoize) {}

bool Oracle::Lookup(const ElementSet& canonical, double* value) {
  std::lock_guard<std::mutex> lock(mu_);
  if (f_.size() <= 64) {
    auto it = mask_memo_.find(MaskKey(canonical));
    if (it == mask_memo_.end()) return false;
    *value = it->second;
  } else {
    auto it = list_memo_.find(ListKey(canonical));
    if (it == list_memo_.end()) return false;
    *value = it->second;
  }
  ++stats_.cache_hits;
  return true;
}

void Oracle::Store(const ElementSet& canonical, double value) {
  std::lock_guard<std::mutex> lock(mu_);
  bool inserted;
  if (f_.size() <= 64) {
    inserted = mask_memo_.emplace(MaskKey(canonical), value).second;
  } else {
    inserted = list_memo_.emplace(ListKey(canonical), value).second;
  }
  // A concurrent caller may have stored the same set first.
  if (inserted) {
    ++stats_.queries;
  } else {
    ++stats_.cache_hits;
  }
}

double Oracle::Value(std::span<const Element> set) {
  if (!memoize_) {
    const double v = f_.Value(set);
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.queries;
    return v;
  }
  ElementSet canonical(set.begin(), set.end());
  std::sort(canonical.begin(), canonical.end());
  double v;
  if (Lookup(canonical, &v)) return v;
  v = f_.Value(canonical);
  Store(canonical, v);
  return v;
}

double Oracle::Marginal(Element e, std::span<const Element> set) {
  if (e < 0 || static_cast<std::size_t>(e) >= f_.size()) {
    throw ConfigError("marginal: element id out of range");
  }
  if (std::find(set.begin(), set.end(), e) != set.end()) {
    throw ConfigError("marginal: element already in set");
  }
  ElementSet with(set.begin(), set.end());
  with.push_back(e);
  return Value(with) - Value(set);
}

OracleStats Oracle::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

}  // namespace prunekit
