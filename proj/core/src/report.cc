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

#include "prunekit/report.h"

#include <sstream>

#include "json.hpp"
#include "prunekit/errors.h"

namespace prunekit {
namespace {

using Json = nlohmann::ordered_json;

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix MatrixFrom(const Json& j) {
  Matrix m;
  m.rows = j.size();
  m.cols = m.rows == 0 ? 0 : j.at(0).size();
  for (const Json& row : j) {
    if (row.size() != m.cols) throw ConfigError("similarity rows differ in length");
    for (const Json& x : row) m.data.push_back(x.get<double>());
  }
  return m;
}

Json StatsJson(const OracleStats& s) {
  return Json{{"queries", s.queries}, {"cache_hits", s.cache_hits}};
}

Json GreedyRunJson(const GreedyRun& run) {
  return Json{{"pool", run.pool}, {"picks", run.picks}, {"gains", run.gains}};
}

GreedyRun GreedyRunFrom(const Json& j) {
  GreedyRun run;
  run.pool = j.at("pool").get<ElementSet>();
  run.picks = j.at("picks").get<std::vector<Element>>();
  run.gains = j.at("gains").get<std::vector<double>>();
  return run;
}

Json ParamsJson(const PruneParams& p) {
  return Json{{"k", p.k},
              {"p", p.p},
              {"omega", p.omega},
              {"epsilon", p.epsilon},
              {"ell", p.ell},
              {"seed", p.seed},
              {"shuffle_stream", p.shuffle_stream}};
}

PruneParams ParamsFrom(const Json& j) {
  PruneParams p;
  p.k = j.at("k").get<std::size_t>();
  p.p = j.at("p").get<std::size_t>();
  p.omega = j.at("omega").get<double>();
  p.epsilon = j.at("epsilon").get<double>();
  p.ell = j.at("ell").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.shuffle_stream = j.at("shuffle_stream").get<bool>();
  return p;
}

Json StructureJson(const PruneStructure& s) {
  struct Visitor {
    Json operator()(const FlatStructure&) const { return Json{{"kind", "flat"}}; }
    Json operator()(const DisjointRuns& d) const {
      Json runs = Json::array();
      for (const auto& r : d.runs) runs.push_back(GreedyRunJson(r));
      return Json{{"kind", "disjoint_runs"}, {"runs", runs}};
    }
    Json operator()(const WindowTrace& w) const {
      return Json{{"kind", "window"},
                  {"pick", w.pick == WindowPick::kRandom ? "random" : "argmax"},
                  {"window_size", w.window_size},
                  {"committed", w.committed},
                  {"windows", w.windows}};
    }
    Json operator()(const ThresholdGrid& g) const {
      Json runs = Json::array();
      for (const auto& r : g.runs) runs.push_back(GreedyRunJson(r));
      return Json{{"kind", "threshold_grid"},
                  {"epsilon", g.epsilon},
                  {"eta", g.eta},
                  {"budgets", g.budgets},
                  {"runs", runs}};
    }
  };
  return std::visit(Visitor{}, s);
}

PruneStructure StructureFrom(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "flat") return FlatStructure{};
  if (kind == "disjoint_runs") {
    DisjointRuns d;
    for (const Json& r : j.at("runs")) d.runs.push_back(GreedyRunFrom(r));
    return d;
  }
  if (kind == "window") {
    WindowTrace w;
    w.pick = j.at("pick").get<std::string>() == "random" ? WindowPick::kRandom
                                                          : WindowPick::kArgmax;
    w.window_size = j.at("window_size").get<std::size_t>();
    w.committed = j.at("committed").get<std::vector<Element>>();
    w.windows = j.at("windows").get<std::vector<ElementSet>>();
    return w;
  }
  if (kind == "threshold_grid") {
    ThresholdGrid g;
    g.epsilon = j.at("epsilon").get<double>();
    g.eta = j.at("eta").get<double>();
    g.budgets = j.at("budgets").get<std::vector<std::size_t>>();
    for (const Json& r : j.at("runs")) g.runs.push_back(GreedyRunFrom(r));
    return g;
  }
  throw ConfigError("unknown structure kind '" + kind + "'");
}

Json ContainmentJson(const ContainmentReport& r, bool timing) {
  Json j{{"reference", std::string(ReferenceName(r.reference))},
         {"budgets", r.budgets},
         {"alpha", r.alpha},
         {"reference_values", r.reference_values},
         {"best_inside", r.best_inside},
         {"best_inside_sets", r.best_inside_sets},
         {"inside_exact", r.inside_exact},
         {"alpha_above_one", r.alpha_above_one},
         {"prune_stats", StatsJson(r.prune_stats)},
         {"extraction_stats", StatsJson(r.extraction_stats)}};
  if (timing) {
    j["prune_seconds"] = r.prune_seconds;
    j["extraction_seconds"] = r.extraction_seconds;
  }
  return j;
}

template <typename F>
auto Parsing(const std::string& source, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(source, 0, e.what());
  } catch (const ConfigError& e) {
    throw ParseError(source, 0, e.what());
  }
}

std::string Csv(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string ObjectiveToJson(const ObjectiveSpec& spec) {
  struct Visitor {
    Json operator()(const CoverageSpec& s) const {
      return Json{{"kind", "coverage"}, {"covers", s.covers}, {"weights", s.weights}};
    }
    Json operator()(const CutSpec& s) const {
      Json edges = Json::array();
      for (const Edge& e : s.graph.edges) {
        if (e.weight == 1.0) {
          edges.push_back({e.u, e.v});
        } else {
          edges.push_back({e.u, e.v, e.weight});
        }
      }
      return Json{{"kind", "cut"}, {"n", s.graph.n}, {"edges", edges}};
    }
    Json operator()(const FacilityLocationSpec& s) const {
      return Json{{"kind", "facility_location"}, {"sim", MatrixJson(s.sim)}};
    }
    Json operator()(const ProxySpec& s) const {
      return Json{{"kind", "proxy"},
                  {"sim", MatrixJson(s.fl.sim)},
                  {"theta", s.penalty.theta},
                  {"shift", s.shift}};
    }
    Json operator()(const RestrictedFLSpec& s) const {
      return Json{{"kind", "restricted_fl"},
                  {"sim", MatrixJson(s.sim)},
                  {"rel", s.rel},
                  {"tau", s.tau}};
    }
    Json operator()(const InterferenceSpec& s) const {
      Json intf = Json::array();
      for (const auto& p : s.intf) intf.push_back({p.a, p.b, p.intensity});
      return Json{{"kind", "interference"},
                  {"covers", s.covers},
                  {"universe", s.universe},
                  {"intf", intf},
                  {"lambda", s.lambda}};
    }
  };
  return std::visit(Visitor{}, spec).dump();
}

ObjectiveSpec ObjectiveFromJson(std::string_view text,
                                const std::string& source) {
  return Parsing(source, [&]() -> ObjectiveSpec {
    const Json j = Json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "coverage") {
      CoverageSpec s;
      s.covers = j.at("covers").get<std::vector<std::vector<std::int32_t>>>();
      s.weights = j.at("weights").get<std::vector<double>>();
      return s;
    }
    if (kind == "cut") {
      CutSpec s;
      s.graph.n = j.at("n").get<std::size_t>();
      for (const Json& e : j.at("edges")) {
        if (e.size() != 2 && e.size() != 3) throw ConfigError("edge needs 2 or 3 entries");
        s.graph.edges.push_back({e.at(0).get<Element>(), e.at(1).get<Element>(),
                                 e.size() == 3 ? e.at(2).get<double>() : 1.0});
      }
      return s;
    }
    if (kind == "facility_location") {
      return FacilityLocationSpec{MatrixFrom(j.at("sim"))};
    }
    if (kind == "proxy") {
      ProxySpec s;
      s.fl.sim = MatrixFrom(j.at("sim"));
      s.penalty.theta = j.at("theta").get<std::vector<double>>();
      s.shift = j.value("shift", false);
      return s;
    }
    if (kind == "restricted_fl") {
      RestrictedFLSpec s;
      s.sim = MatrixFrom(j.at("sim"));
      s.rel = j.at("rel").get<std::vector<double>>();
      s.tau = j.at("tau").get<double>();
      return s;
    }
    if (kind == "interference") {
      InterferenceSpec s;
      s.covers = j.at("covers").get<std::vector<std::vector<std::int32_t>>>();
      s.universe = j.at("universe").get<std::size_t>();
      for (const Json& p : j.at("intf")) {
        if (p.size() != 3) throw ConfigError("interference pair needs 3 entries");
        s.intf.push_back({p.at(0).get<Element>(), p.at(1).get<Element>(),
                          p.at(2).get<double>()});
      }
      s.lambda = j.at("lambda").get<double>();
      return s;
    }
    throw ConfigError("unknown objective kind '" + kind + "'");
  });
}

std::string GenSpecToJson(const GenSpec& spec, std::uint64_t seed) {
  struct Visitor {
    Json operator()(const GnmGen& g) const { return Json{{"n", g.n}, {"m", g.m}}; }
    Json operator()(const PlantedGen& g) const {
      const PlantedGen defaults;
      return Json{{"n", g.n},
                  {"blocks", g.blocks},
                  {"block_mode", g.mode == BlockMode::kCount ? "count" : "size"},
                  {"p_in", g.p_in},
                  {"p_out", g.p_out},
                  {"invented_defaults",
                   g.p_in == defaults.p_in && g.p_out == defaults.p_out},
                  {"note", "p_in and p_out defaults are invented, not published settings"}};
    }
    Json operator()(const InterferenceGen& g) const {
      return Json{{"n", g.n},
                  {"universe", g.universe},
                  {"min_cover", g.params.min_cover},
                  {"max_cover", g.params.max_cover},
                  {"pair_probability", g.params.pair_probability},
                  {"intensity", {g.params.intensity_lo, g.params.intensity_hi}},
                  {"lambda", {g.params.lambda_lo, g.params.lambda_hi}}};
    }
    Json operator()(const SimilarityGen& g) const {
      return Json{{"rows", g.rows}, {"n", g.n}};
    }
    Json operator()(const CoverageGen& g) const {
      return Json{{"n", g.n},
                  {"universe", g.universe},
                  {"min_cover", g.min_cover},
                  {"max_cover", g.max_cover}};
    }
  };
  Json j{{"family", FamilyName(spec)}, {"seed", seed}};
  j["params"] = std::visit(Visitor{}, spec);
  return j.dump();
}

std::string PruneParamsToJson(const PruneParams& params) {
  return ParamsJson(params).dump();
}

std::string PrunedSetToJson(const PrunedSet& pruned, bool timing) {
  Json j{{"algorithm", pruned.algorithm},
         {"params", ParamsJson(pruned.params)},
         {"elements", pruned.elements},
         {"size", pruned.elements.size()},
         {"cap", pruned.cap},
         {"structure", StructureJson(pruned.structure)},
         {"stats", StatsJson(pruned.stats)}};
  if (timing) j["elapsed_seconds"] = pruned.elapsed_seconds;
  return j.dump();
}

PrunedSet PrunedSetFromJson(std::string_view text, const std::string& source) {
  return Parsing(source, [&] {
    const Json j = Json::parse(text);
    PrunedSet p;
    p.algorithm = j.at("algorithm").get<std::string>();
    p.params = ParamsFrom(j.at("params"));
    p.elements = j.at("elements").get<ElementSet>();
    p.cap = j.at("cap").get<std::size_t>();
    p.structure = StructureFrom(j.at("structure"));
    p.stats.queries = j.at("stats").at("queries").get<std::uint64_t>();
    p.stats.cache_hits = j.at("stats").at("cache_hits").get<std::uint64_t>();
    p.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    return p;
  });
}

std::string KnapsackPrunedSetToJson(const KnapsackPrunedSet& pruned,
                                    bool timing) {
  Json runs = Json::array();
  for (const DensityRun& r : pruned.runs) {
    runs.push_back(Json{{"picks", r.picks},
                        {"gains", r.gains},
                        {"costs", r.costs},
                        {"densities", r.densities},
                        {"skipped", r.skipped},
                        {"accepted_cost", r.accepted_cost},
                        {"dummy_cost", r.dummy_cost}});
  }
  Json j{{"algorithm", "sdg_density"},
         {"budget", pruned.budget},
         {"ell", pruned.ell},
         {"elements", pruned.elements},
         {"total_cost", pruned.total_cost},
         {"runs", runs},
         {"stats", StatsJson(pruned.stats)}};
  if (timing) j["elapsed_seconds"] = pruned.elapsed_seconds;
  return j.dump();
}

std::string ContainmentToJson(const ContainmentReport& report, bool timing) {
  return ContainmentJson(report, timing).dump();
}

std::string SweepRowToJson(const SweepRow& row, bool timing) {
  Json j{{"instance", row.instance_id},
         {"family", row.family},
         {"algorithm", std::string(AlgorithmName(row.algorithm))},
         {"omega", row.omega},
         {"seed", row.seed}};
  if (row.report) {
    j["params"] = ParamsJson(row.params);
    j["pruned"] = row.pruned;
    j["alpha_k"] = row.report->alpha_top();
    j["report"] = ContainmentJson(*row.report, timing);
  } else {
    j["error"] = row.error;
  }
  return j.dump();
}

std::string SweepCellToJson(const SweepCell& cell) {
  return Json{{"instance", cell.instance_id},
              {"family", cell.family},
              {"algorithm", std::string(AlgorithmName(cell.algorithm))},
              {"omega", cell.omega},
              {"rows", cell.rows},
              {"errors", cell.errors},
              {"mean_alpha", cell.mean_alpha},
              {"std_alpha", cell.std_alpha},
              {"min_alpha", cell.min_alpha},
              {"mean_pruned_size", cell.mean_pruned_size},
              {"mean_queries", cell.mean_queries}}
      .dump();
}

std::string PropertyReportToJson(const PropertyReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        Json{{"a", v.a}, {"b", v.b}, {"x", v.x}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return Json{{"property", report.property},
              {"exhaustive", report.exhaustive},
              {"checked", report.checked},
              {"violation_count", report.violation_count},
              {"max_violation", report.max_violation},
              {"passed", report.passed()},
              {"violations", violations}}
      .dump();
}

std::string SeparationToJson(const SeparationConfig& config,
                             const SeparationResult& r) {
  Json cfg{{"n", config.n},
           {"universe", config.universe},
           {"k", config.k},
           {"omega", config.omega},
           {"trials", config.trials},
           {"seed", config.seed},
           {"extraction",
            config.extraction == SeparationExtraction::kExact ? "exact" : "greedy"},
           {"extract_stop_at_zero", config.extract_stop_at_zero}};
  return Json{{"config", cfg},
              {"trials", r.trials},
              {"greedy_contain", r.greedy_contain},
              {"sdg_contain", r.sdg_contain},
              {"greedy_contain_any", r.greedy_contain_any},
              {"sdg_contain_any", r.sdg_contain_any},
              {"greedy_contain_rate", r.rate(r.greedy_contain)},
              {"sdg_contain_rate", r.rate(r.sdg_contain)},
              {"sdg_value_wins", r.sdg_value_wins},
              {"greedy_value_wins", r.greedy_value_wins},
              {"value_separation_rate", r.rate(r.sdg_value_wins)},
              {"max_gap", r.max_gap},
              {"greedy_k_suboptimal", r.greedy_k_suboptimal},
              {"mean_alpha_greedy", r.mean_alpha_greedy},
              {"mean_alpha_sdg", r.mean_alpha_sdg}}
      .dump();
}

std::string SweepCsv(const SweepResult& result) {
  std::ostringstream os;
  os << "family,instance,algorithm,omega,rows,errors,mean_alpha,std_alpha,"
        "min_alpha,mean_pruned_size\n";
  for (const SweepCell& c : result.cells) {
    os << c.family << ',' << c.instance_id << ',' << AlgorithmName(c.algorithm)
       << ',' << c.omega << ',' << c.rows << ',' << c.errors << ','
       << Csv(c.mean_alpha) << ',' << Csv(c.std_alpha) << ','
       << Csv(c.min_alpha) << ',' << Csv(c.mean_pruned_size) << '\n';
  }
  return os.str();
}

std::string SeparationCsv(const SeparationConfig& config,
                          const SeparationResult& r) {
  std::ostringstream os;
  os << "n,k,omega,instances,greedy_k_subopt,opt_in_pg,opt_in_ps,"
        "opt_in_pg_any,opt_in_ps_any,value_seps,value_seps_rate,max_gap\n";
  os << config.n << ',' << config.k << ',' << config.omega << ',' << r.trials
     << ',' << Csv(r.rate(r.greedy_k_suboptimal)) << ','
     << Csv(r.rate(r.greedy_contain)) << ',' << Csv(r.rate(r.sdg_contain))
     << ',' << Csv(r.rate(r.greedy_contain_any)) << ','
     << Csv(r.rate(r.sdg_contain_any)) << ',' << r.sdg_value_wins << ','
     << Csv(r.rate(r.sdg_value_wins)) << ',' << Csv(r.max_gap) << '\n';
  return os.str();
}

}  // namespace prunekit
