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

#include "prunekit/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "prunekit/errors.h"

namespace prunekit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> SplitComma(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(',', start);
    out.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> ToDouble(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<long long> ToInt(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string Num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Iterates lines with 1-based numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  bool Next(std::string_view* line) {
    if (!std::getline(in_, buf_)) return false;
    ++number_;
    *line = Trim(buf_);
    return true;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(source_, number_, what);
  }

  std::size_t number() const { return number_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::string buf_;
  std::size_t number_ = 0;
};

// "# key value" directive inside a comment line.
std::optional<long long> Directive(std::string_view line,
                                   std::string_view key) {
  std::string_view body = Trim(line.substr(1));
  if (body.substr(0, key.size()) != key) return std::nullopt;
  const auto parts = SplitWhitespace(body);
  if (parts.size() != 2 || parts[0] != key) return std::nullopt;
  return ToInt(parts[1]);
}

template <typename Parse>
auto LoadFile(const std::string& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse(in, path);
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph ParseEdgeList(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Graph g;
  std::optional<std::size_t> declared;
  std::size_t max_id = 0;
  bool any = false;
  std::string_view line;
  while (reader.Next(&line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto n = Directive(line, "nodes")) {
        if (*n < 0) reader.Fail("node count must be non-negative");
        declared = static_cast<std::size_t>(*n);
      }
      continue;
    }
    const auto parts = SplitWhitespace(line);
    if (parts.size() != 2 && parts.size() != 3) {
      reader.Fail("expected 'u v [w]'");
    }
    const auto u = ToInt(parts[0]);
    const auto v = ToInt(parts[1]);
    if (!u || !v || *u < 0 || *v < 0) {
      reader.Fail("vertex ids must be non-negative integers");
    }
    if (*u == *v) reader.Fail("self-loop");
    double w = 1.0;
    if (parts.size() == 3) {
      const auto parsed = ToDouble(parts[2]);
      if (!parsed || *parsed < 0.0) {
        reader.Fail("edge weight must be a non-negative number");
      }
      w = *parsed;
    }
    g.edges.push_back(
        {static_cast<Element>(*u), static_cast<Element>(*v), w});
    max_id = std::max({max_id, static_cast<std::size_t>(*u),
                       static_cast<std::size_t>(*v)});
    any = true;
  }
  g.n = any ? max_id + 1 : 0;
  if (declared) {
    if (*declared < g.n) {
      throw ParseError(source, 0, "edge ids exceed the declared node count");
    }
    g.n = *declared;
  }
  return g;
}

CoverageSpec ParseCoverageList(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::map<long long, std::vector<std::int32_t>> rows;
  std::optional<std::size_t> declared;
  std::int32_t max_item = -1;
  std::string_view line;
  while (reader.Next(&line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto m = Directive(line, "universe")) {
        if (*m < 0) reader.Fail("universe size must be non-negative");
        declared = static_cast<std::size_t>(*m);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) reader.Fail("expected 'elem: items'");
    const auto elem = ToInt(Trim(line.substr(0, colon)));
    if (!elem || *elem < 0) reader.Fail("element id must be a non-negative integer");
    if (rows.count(*elem)) reader.Fail("element listed twice");
    std::vector<std::int32_t> items;
    for (std::string_view tok : SplitWhitespace(line.substr(colon + 1))) {
      const auto item = ToInt(tok);
      if (!item || *item < 0) reader.Fail("item ids must be non-negative integers");
      items.push_back(static_cast<std::int32_t>(*item));
      max_item = std::max(max_item, static_cast<std::int32_t>(*item));
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    rows[*elem] = std::move(items);
  }
  CoverageSpec spec;
  if (!rows.empty()) spec.covers.resize(static_cast<std::size_t>(rows.rbegin()->first) + 1);
  for (auto& [e, items] : rows) spec.covers[static_cast<std::size_t>(e)] = std::move(items);
  std::size_t universe = static_cast<std::size_t>(max_item + 1);
  if (declared) {
    if (*declared < universe) {
      throw ParseError(source, 0, "item ids exceed the declared universe");
    }
    universe = *declared;
  }
  spec.weights.assign(universe, 1.0);
  return spec;
}

Matrix ParseSimilarityCsv(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Matrix m;
  std::string_view line;
  while (reader.Next(&line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cells = SplitComma(line);
    if (m.rows == 0) {
      m.cols = cells.size();
    } else if (cells.size() != m.cols) {
      reader.Fail("row has " + std::to_string(cells.size()) +
                  " columns, expected " + std::to_string(m.cols));
    }
    for (std::string_view c : cells) {
      const auto v = ToDouble(c);
      if (!v) reader.Fail("not a number: '" + std::string(c) + "'");
      if (*v < 0.0) reader.Fail("similarities must be non-negative");
      m.data.push_back(*v);
    }
    ++m.rows;
  }
  if (m.rows == 0) throw ParseError(source, 0, "similarity matrix is empty");
  return m;
}

namespace {

// Two-column "index,value" files with an optional header.
std::vector<double> ParseIndexed(std::istream& in, const std::string& source,
                                 std::string_view header, bool positive) {
  LineReader reader(in, source);
  std::map<long long, double> values;
  bool first = true;
  std::string_view line;
  while (reader.Next(&line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cells = SplitComma(line);
    const bool was_first = first;
    first = false;
    if (was_first && cells.size() == 2 && !ToInt(cells[0])) {
      const std::string joined =
          std::string(cells[0]) + "," + std::string(cells[1]);
      if (joined == header) continue;
    }
    if (cells.size() != 2) reader.Fail("expected two columns");
    const auto idx = ToInt(cells[0]);
    const auto v = ToDouble(cells[1]);
    if (!idx || *idx < 0) reader.Fail("index must be a non-negative integer");
    if (!v) reader.Fail("not a number: '" + std::string(cells[1]) + "'");
    if (positive && !(*v > 0.0)) reader.Fail("value must be positive");
    if (!values.emplace(*idx, *v).second) reader.Fail("index listed twice");
  }
  std::vector<double> out;
  for (const auto& [idx, v] : values) {
    if (static_cast<std::size_t>(idx) != out.size()) {
      throw ParseError(source, 0,
                       "missing index " + std::to_string(out.size()));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<double> ParseCostsCsv(std::istream& in, const std::string& source) {
  return ParseIndexed(in, source, "id,cost", true);
}

PenaltyCurve ParsePenaltyCsv(std::istream& in, const std::string& source) {
  PenaltyCurve curve{ParseIndexed(in, source, "size,theta", false)};
  try {
    curve.Validate();
  } catch (const ConfigError& e) {
    throw ParseError(source, 0, e.what());
  }
  return curve;
}

Graph LoadEdgeList(const std::string& path) {
  return LoadFile(path, [](std::istream& in, const std::string& p) {
    return ParseEdgeList(in, p);
  });
}
CoverageSpec LoadCoverageList(const std::string& path) {
  return LoadFile(path, [](std::istream& in, const std::string& p) {
    return ParseCoverageList(in, p);
  });
}
Matrix LoadSimilarityCsv(const std::string& path) {
  return LoadFile(path, [](std::istream& in, const std::string& p) {
    return ParseSimilarityCsv(in, p);
  });
}
std::vector<double> LoadCostsCsv(const std::string& path) {
  return LoadFile(path, [](std::istream& in, const std::string& p) {
    return ParseCostsCsv(in, p);
  });
}
PenaltyCurve LoadPenaltyCsv(const std::string& path) {
  return LoadFile(path, [](std::istream& in, const std::string& p) {
    return ParsePenaltyCsv(in, p);
  });
}

void WriteEdgeList(std::ostream& out, const Graph& graph) {
  out << "# nodes " << graph.n << '\n';
  for (const Edge& e : graph.edges) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) out << ' ' << Num(e.weight);
    out << '\n';
  }
}

void WriteCoverageList(std::ostream& out, const CoverageSpec& spec) {
  out << "# universe " << spec.weights.size() << '\n';
  for (std::size_t e = 0; e < spec.covers.size(); ++e) {
    out << e << ':';
    for (std::int32_t item : spec.covers[e]) out << ' ' << item;
    out << '\n';
  }
}

void WriteSimilarityCsv(std::ostream& out, const Matrix& sim) {
  for (std::size_t r = 0; r < sim.rows; ++r) {
    for (std::size_t c = 0; c < sim.cols; ++c) {
      if (c > 0) out << ',';
      out << Num(sim.at(r, c));
    }
    out << '\n';
  }
}

void WriteCostsCsv(std::ostream& out, const std::vector<double>& costs) {
  out << "id,cost\n";
  for (std::size_t i = 0; i < costs.size(); ++i) {
    out << i << ',' << Num(costs[i]) << '\n';
  }
}

void WritePenaltyCsv(std::ostream& out, const PenaltyCurve& curve) {
  out << "size,theta\n";
  for (std::size_t s = 0; s < curve.theta.size(); ++s) {
    out << s << ',' << Num(curve.theta[s]) << '\n';
  }
}

}  // namespace prunekit
