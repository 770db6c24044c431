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

// prunekit command line. Every report is line-delimited JSON: a header
// record (schema, command, resolved config, timestamp and timings) followed
// by body records that carry no wall-clock data, so two runs with the same
// config produce identical bodies.

#include "cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "prunekit/errors.h"
#include "prunekit/exact.h"
#include "prunekit/harness.h"
#include "prunekit/instances.h"
#include "prunekit/io.h"
#include "prunekit/knapsack.h"
#include "prunekit/objectives.h"
#include "prunekit/oracle.h"
#include "prunekit/properties.h"
#include "prunekit/prune.h"
#include "prunekit/report.h"

namespace prunekit::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  // Objective source.
  std::string objective;
  std::string graph;
  std::string sim;
  std::string covers;
  std::string penalty;
  bool shift = false;
  // Knapsack.
  std::string costs;
  double budget = 0.0;
  std::string budgets_grid = "log";
  // Pruning.
  std::size_t k = 0;
  std::vector<double> omegas;
  std::size_t p = 0;
  std::size_t ell = 0;
  double epsilon = 0.0;
  std::vector<std::string> algos;
  std::string seeds = "0";
  bool shuffle_stream = false;
  std::string reference = "exact";
  std::string out;
  std::size_t jobs = 1;
  // eval
  std::string pruned_path;
  bool full = false;
  // gen, sweep, separation
  std::string family = "gnm";
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t blocks = 0;
  std::string block_mode = "count";
  double p_in = -1.0;
  double p_out = -1.0;
  std::size_t universe = 0;
  std::size_t rows = 0;
  std::string format = "json";
  std::string csv;
  // check, separation
  std::size_t trials = 0;
  bool exhaustive = false;
  std::string extraction = "exact";
};

// Collected output of one command.
struct Report {
  Json config = Json::object();
  Json timing = Json::object();
  std::vector<std::string> body;
  // Raw document written instead of JSONL (gen).
  std::string raw;
};

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double Since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::uint64_t> ParseSeeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  const auto number = [&](const std::string& s) -> std::uint64_t {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw ConfigError("bad seed '" + s + "'");
    }
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const std::uint64_t lo = number(item.substr(0, dash));
      const std::uint64_t hi = number(item.substr(dash + 1));
      if (hi < lo || hi - lo > 1000000) throw ConfigError("bad seed range");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(number(item));
    }
  }
  if (seeds.empty()) throw ConfigError("--seeds is empty");
  return seeds;
}

std::vector<double> ParseBudgets(const std::string& text, double budget) {
  if (text.rfind("log", 0) == 0) {
    std::size_t points = 8;
    if (text.size() > 3) {
      if (text[3] != ':') throw ConfigError("--budgets-grid: expected log[:N]");
      points = std::stoul(text.substr(4));
    }
    return BudgetGridLog(budget, points);
  }
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--budgets-grid: bad value '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("--budgets-grid is empty");
  return out;
}

// --objective names a JSON spec file or a kind; kinds draw their data from
// --graph, --sim, --covers and --penalty.
ObjectiveSpec LoadObjective(const Options& o, Json& config) {
  if (!o.objective.empty() && std::filesystem::is_regular_file(o.objective)) {
    config["objective"] = {{"file", o.objective}};
    return ObjectiveFromJson(ReadFile(o.objective), o.objective);
  }
  std::string kind = o.objective;
  if (kind.empty()) {
    if (!o.graph.empty()) {
      kind = "cut";
    } else if (!o.sim.empty()) {
      kind = o.penalty.empty() ? "facility_location" : "proxy";
    } else if (!o.covers.empty()) {
      kind = "coverage";
    } else {
      throw ConfigError(
          "no objective: pass --objective FILE or one of --graph/--sim/--covers");
    }
  }
  const auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) {
      throw ConfigError("objective '" + kind + "' needs " + flag);
    }
    return value;
  };
  if (kind == "cut") {
    config["objective"] = {{"kind", kind}, {"graph", o.graph}};
    return CutSpec{LoadEdgeList(need(o.graph, "--graph"))};
  }
  if (kind == "facility_location" || kind == "fl") {
    config["objective"] = {{"kind", "facility_location"}, {"sim", o.sim}};
    return FacilityLocationSpec{LoadSimilarityCsv(need(o.sim, "--sim"))};
  }
  if (kind == "proxy") {
    config["objective"] = {
        {"kind", kind}, {"sim", o.sim}, {"penalty", o.penalty}, {"shift", o.shift}};
    ProxySpec spec;
    spec.fl.sim = LoadSimilarityCsv(need(o.sim, "--sim"));
    spec.penalty = LoadPenaltyCsv(need(o.penalty, "--penalty"));
    spec.shift = o.shift;
    return spec;
  }
  if (kind == "coverage") {
    config["objective"] = {{"kind", kind}, {"covers", o.covers}};
    return LoadCoverageList(need(o.covers, "--covers"));
  }
  throw ConfigError("--objective '" + o.objective +
                    "' is neither a file nor a kind loadable from flags "
                    "(cut, facility_location, proxy, coverage)");
}

GenSpec MakeGenSpec(const Options& o) {
  if (o.family == "gnm") {
    GnmGen g;
    if (o.n) g.n = o.n;
    if (o.m) g.m = o.m;
    return g;
  }
  if (o.family == "planted") {
    PlantedGen g;
    if (o.n) g.n = o.n;
    if (o.blocks) g.blocks = o.blocks;
    if (o.p_in >= 0.0) g.p_in = o.p_in;
    if (o.p_out >= 0.0) g.p_out = o.p_out;
    if (o.block_mode == "size") {
      g.mode = BlockMode::kSize;
    } else if (o.block_mode != "count") {
      throw ConfigError("--block-mode must be 'count' or 'size'");
    }
    return g;
  }
  if (o.family == "interference") {
    InterferenceGen g;
    if (o.n) g.n = o.n;
    if (o.universe) g.universe = o.universe;
    return g;
  }
  if (o.family == "similarity") {
    SimilarityGen g;
    if (o.n) g.n = o.n;
    if (o.rows) g.rows = o.rows;
    return g;
  }
  if (o.family == "coverage") {
    CoverageGen g;
    if (o.n) g.n = o.n;
    if (o.universe) g.universe = o.universe;
    return g;
  }
  throw ConfigError("unknown family '" + o.family + "'");
}

std::string InstanceId(const GenSpec& spec) {
  struct Visitor {
    std::string operator()(const GnmGen& g) const {
      return "gnm(" + std::to_string(g.n) + "," + std::to_string(g.m) + ")";
    }
    std::string operator()(const PlantedGen& g) const {
      return "planted(" + std::to_string(g.n) + "," + std::to_string(g.blocks) + ")";
    }
    std::string operator()(const InterferenceGen& g) const {
      return "interference(" + std::to_string(g.n) + "," +
             std::to_string(g.universe) + ")";
    }
    std::string operator()(const SimilarityGen& g) const {
      return "similarity(" + std::to_string(g.rows) + "x" + std::to_string(g.n) + ")";
    }
    std::string operator()(const CoverageGen& g) const {
      return "coverage(" + std::to_string(g.n) + "," + std::to_string(g.universe) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

double SingleOmega(const Options& o) {
  if (o.omegas.empty()) return 1.0;
  if (o.omegas.size() != 1) throw ConfigError("--omega takes one value here");
  return o.omegas.front();
}

PruneParams MakeParams(const Options& o, std::uint64_t seed) {
  PruneParams params;
  params.k = o.k;
  params.p = o.p;
  params.omega = SingleOmega(o);
  params.epsilon = o.epsilon;
  params.ell = o.ell;
  params.seed = seed;
  params.shuffle_stream = o.shuffle_stream;
  params.Validate();
  return params;
}

std::size_t KnapsackRuns(const Options& o) {
  if (o.ell > 0) return o.ell;
  if (o.epsilon > 0.0) {
    return static_cast<std::size_t>(std::ceil(1.0 / o.epsilon - 1e-12));
  }
  throw ConfigError("knapsack pruning needs --ell or --epsilon");
}

Json Record(const char* type, const std::string& data_json) {
  Json j{{"type", type}};
  j["data"] = Json::parse(data_json);
  return j;
}

// --- Commands ------------------------------------------------------------------

void CmdGen(const Options& o, Report& r) {
  const GenSpec spec = MakeGenSpec(o);
  const std::uint64_t seed = ParseSeeds(o.seeds).front();
  const Json gen = Json::parse(GenSpecToJson(spec, seed));
  r.config["generator"] = gen;
  r.config["format"] = o.format;
  const ObjectiveSpec objective = Generate(spec, seed);
  if (o.format == "json") {
    Json doc = Json::parse(ObjectiveToJson(objective));
    doc["generator"] = gen;
    r.raw = doc.dump() + "\n";
    return;
  }
  if (o.format != "native") throw ConfigError("--format must be json or native");
  std::ostringstream os;
  os << "# generator " << gen.dump() << '\n';
  if (const auto* cut = std::get_if<CutSpec>(&objective)) {
    WriteEdgeList(os, cut->graph);
  } else if (const auto* fl = std::get_if<FacilityLocationSpec>(&objective)) {
    WriteSimilarityCsv(os, fl->sim);
  } else if (const auto* cov = std::get_if<CoverageSpec>(&objective)) {
    WriteCoverageList(os, *cov);
  } else {
    throw ConfigError("family '" + o.family + "' has no native text format");
  }
  r.raw = os.str();
}

void CmdPrune(const Options& o, Report& r) {
  const ObjectiveSpec spec = LoadObjective(o, r.config);
  const auto f = MakeObjective(spec);
  Oracle oracle(*f);
  const std::uint64_t seed = ParseSeeds(o.seeds).front();
  if (!o.costs.empty()) {
    const KnapsackInstance inst{LoadCostsCsv(o.costs), o.budget};
    if (inst.costs.size() != f->size()) {
      throw ConfigError("--costs has " + std::to_string(inst.costs.size()) +
                        " entries for " + std::to_string(f->size()) + " elements");
    }
    const std::size_t ell = KnapsackRuns(o);
    r.config["knapsack"] = {{"costs", o.costs}, {"budget", o.budget}, {"ell", ell}};
    const KnapsackPrunedSet pruned = PruneSdgDensity(oracle, inst, ell);
    r.timing["prune_seconds"] = pruned.elapsed_seconds;
    r.body.push_back(
        Record("knapsack_pruned", KnapsackPrunedSetToJson(pruned, false)).dump());
    return;
  }
  if (o.algos.size() != 1) throw ConfigError("prune takes exactly one --algo");
  const Algorithm algorithm = ParseAlgorithm(o.algos.front());
  const PruneParams params = MakeParams(o, seed);
  const PrunedSet pruned = Prune(algorithm, oracle, params);
  r.config["algorithm"] = pruned.algorithm;
  r.config["params"] = Json::parse(PruneParamsToJson(pruned.params));
  r.timing["prune_seconds"] = pruned.elapsed_seconds;
  r.body.push_back(Record("pruned", PrunedSetToJson(pruned, false)).dump());
}

PrunedSet ReadPruned(const std::string& path) {
  std::istringstream in(ReadFile(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw ParseError(path, number, e.what());
    }
    if (j.value("type", "") == "pruned") {
      return PrunedSetFromJson(j.at("data").dump(), path);
    }
  }
  throw ParseError(path, 0, "no 'pruned' record found");
}

void CmdEval(const Options& o, Report& r) {
  const ObjectiveSpec spec = LoadObjective(o, r.config);
  const auto f = MakeObjective(spec);
  const ReferenceMode mode = ParseReference(o.reference);
  r.config["reference"] = o.reference;
  r.config["guard"] = EnumerationGuard();
  const std::uint64_t seed = ParseSeeds(o.seeds).front();

  if (!o.costs.empty()) {
    const KnapsackInstance inst{LoadCostsCsv(o.costs), o.budget};
    if (inst.costs.size() != f->size()) {
      throw ConfigError("--costs does not match the ground set");
    }
    const std::size_t ell = KnapsackRuns(o);
    const std::vector<double> budgets = ParseBudgets(o.budgets_grid, o.budget);
    r.config["knapsack"] = {
        {"costs", o.costs}, {"budget", o.budget}, {"ell", ell}, {"budgets", budgets}};
    Oracle oracle(*f);
    const KnapsackPrunedSet pruned = PruneSdgDensity(oracle, inst, ell);
    const ContainmentReport report =
        EvaluateKnapsackContainment(*f, pruned, inst, budgets, mode);
    r.timing["prune_seconds"] = report.prune_seconds;
    r.timing["extraction_seconds"] = report.extraction_seconds;
    Json rec = Record("containment", ContainmentToJson(report, false));
    rec["pruned"] = pruned.elements;
    rec["total_cost"] = pruned.total_cost;
    r.body.push_back(rec.dump());
    return;
  }

  if (o.k == 0) throw ConfigError("eval needs --k >= 1");
  PrunedSet pruned;
  if (o.full) {
    pruned.algorithm = "full";
    pruned.elements = FullSet(f->size());
    r.config["pruned"] = "full";
  } else if (!o.pruned_path.empty()) {
    pruned = ReadPruned(o.pruned_path);
    r.config["pruned"] = o.pruned_path;
  } else {
    if (o.algos.size() != 1) {
      throw ConfigError("eval needs --full, --pruned FILE or one --algo");
    }
    Oracle oracle(*f);
    pruned = Prune(ParseAlgorithm(o.algos.front()), oracle, MakeParams(o, seed));
    r.config["algorithm"] = pruned.algorithm;
    r.config["params"] = Json::parse(PruneParamsToJson(pruned.params));
  }
  for (Element e : pruned.elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= f->size()) {
      throw ConfigError("pruned set has an element outside the ground set");
    }
  }
  r.config["k"] = o.k;
  const ContainmentReport report = EvaluateContainment(*f, pruned, o.k, mode);
  r.timing["prune_seconds"] = report.prune_seconds;
  r.timing["extraction_seconds"] = report.extraction_seconds;
  Json rec = Record("containment", ContainmentToJson(report, false));
  rec["pruned"] = pruned.elements;
  r.body.push_back(rec.dump());
}

void CmdSweep(const Options& o, Report& r) {
  SweepConfig config;
  const GenSpec gen = MakeGenSpec(o);
  config.instances.push_back({InstanceId(gen), gen});
  for (const auto& a : o.algos) config.algorithms.push_back(ParseAlgorithm(a));
  if (config.algorithms.empty()) {
    config.algorithms = {Algorithm::kSeqDisjoint, Algorithm::kWindowMax,
                         Algorithm::kWindowRand, Algorithm::kThresholdStream,
                         Algorithm::kStdGreedy, Algorithm::kRandom};
  }
  config.omegas = o.omegas.empty() ? std::vector<double>{2.0} : o.omegas;
  config.seeds = ParseSeeds(o.seeds);
  config.k = o.k == 0 ? 5 : o.k;
  config.epsilon = o.epsilon;
  config.reference = ParseReference(o.reference);
  config.jobs = o.jobs;

  Json algos = Json::array();
  for (Algorithm a : config.algorithms) algos.push_back(std::string(AlgorithmName(a)));
  r.config["instance"] = Json::parse(GenSpecToJson(gen, 0)).at("params");
  r.config["family"] = FamilyName(gen);
  r.config["algorithms"] = algos;
  r.config["omegas"] = config.omegas;
  r.config["seeds"] = config.seeds;
  r.config["k"] = config.k;
  r.config["epsilon"] = config.epsilon;
  r.config["reference"] = o.reference;
  r.config["guard"] = EnumerationGuard();
  r.config["jobs"] = config.jobs;

  const auto start = std::chrono::steady_clock::now();
  const SweepResult result = Sweep(config);
  r.timing["sweep_seconds"] = Since(start);
  for (const SweepRow& row : result.rows) {
    Json rec{{"type", "row"}};
    rec["data"] = Json::parse(SweepRowToJson(row, false));
    r.body.push_back(rec.dump());
  }
  Json cells = Json::array();
  for (const SweepCell& c : result.cells) cells.push_back(Json::parse(SweepCellToJson(c)));
  r.body.push_back(Json{{"type", "aggregate"}, {"cells", cells}}.dump());
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw ConfigError("cannot write --csv " + o.csv);
    csv << SweepCsv(result);
  }
}

void CmdCheck(const Options& o, Report& r) {
  const ObjectiveSpec spec = LoadObjective(o, r.config);
  const auto f = MakeObjective(spec);
  const std::uint64_t seed = ParseSeeds(o.seeds).front();
  const std::size_t trials = o.trials == 0 ? 1000 : o.trials;
  r.config["exhaustive"] = o.exhaustive;
  if (!o.exhaustive) {
    r.config["trials"] = trials;
    r.config["seed"] = seed;
  }
  const auto start = std::chrono::steady_clock::now();
  const PropertyReport sub = o.exhaustive ? CheckSubmodularExhaustive(*f)
                                          : CheckSubmodular(*f, trials, seed);
  const PropertyReport mono = o.exhaustive ? CheckMonotoneExhaustive(*f)
                                           : CheckMonotone(*f, trials, seed);
  r.timing["check_seconds"] = Since(start);
  r.body.push_back(Record("property", PropertyReportToJson(sub)).dump());
  r.body.push_back(Record("property", PropertyReportToJson(mono)).dump());
}

void CmdSeparation(const Options& o, Report& r) {
  SeparationConfig config;
  if (o.n) config.n = o.n;
  if (o.universe) config.universe = o.universe;
  if (o.k) config.k = o.k;
  if (!o.omegas.empty()) {
    const double w = SingleOmega(o);
    if (w < 1.0 || w != std::floor(w)) {
      throw ConfigError("separation needs an integer --omega >= 1");
    }
    config.omega = static_cast<std::size_t>(w);
  }
  if (o.trials) config.trials = o.trials;
  config.seed = ParseSeeds(o.seeds).front();
  if (o.extraction == "greedy") {
    config.extraction = SeparationExtraction::kGreedy;
  } else if (o.extraction != "exact") {
    throw ConfigError("--extraction must be 'exact' or 'greedy'");
  }
  const auto start = std::chrono::steady_clock::now();
  const SeparationResult result = SeparationStudy(config);
  r.timing["separation_seconds"] = Since(start);
  const Json doc = Json::parse(SeparationToJson(config, result));
  r.config = doc.at("config");
  Json rec{{"type", "separation"}};
  Json data = doc;
  data.erase("config");
  rec["data"] = data;
  r.body.push_back(rec.dump());
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw ConfigError("cannot write --csv " + o.csv);
    csv << SeparationCsv(config, result);
  }
}

void Emit(const std::string& command, const Report& r, const Options& o,
          std::ostream& out) {
  std::ostringstream text;
  if (!r.raw.empty()) {
    text << r.raw;
  } else {
    Json header{{"type", "header"},
                {"schema", std::string(kSchemaVersion)},
                {"command", command},
                {"created", Timestamp()},
                {"config", r.config},
                {"timing", r.timing}};
    text << header.dump() << '\n';
    for (const auto& line : r.body) text << line << '\n';
  }
  if (o.out.empty() || o.out == "-") {
    out << text.str();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write --out " + o.out);
  file << text.str();
}

int ErrorRecord(std::ostream& err, int code, const std::string& kind,
                const std::string& message, const Json& extra = Json::object()) {
  Json j{{"type", "error"},
         {"schema", std::string(kSchemaVersion)},
         {"code", code},
         {"error", kind},
         {"message", message}};
  for (const auto& [key, value] : extra.items()) j[key] = value;
  err << j.dump() << '\n';
  return code;
}

void AddObjectiveFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--objective", o.objective,
                  "Objective JSON file, or a kind: cut, facility_location, "
                  "proxy, coverage");
  cmd->add_option("--graph", o.graph, "Edge list file (cut objective)");
  cmd->add_option("--sim", o.sim, "Similarity CSV (facility location / proxy)");
  cmd->add_option("--covers", o.covers, "Coverage list file");
  cmd->add_option("--penalty", o.penalty, "Penalty CSV size,theta (proxy)");
  cmd->add_flag("--shift", o.shift, "Shift the proxy to be non-negative");
}

void AddPruneFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "Target budget k");
  cmd->add_option("--omega", o.omegas, "Pruning factor, p = omega * k")
      ->delimiter(',');
  cmd->add_option("--p", o.p, "Explicit pruning budget p");
  cmd->add_option("--ell", o.ell, "Disjoint run count");
  cmd->add_option("--epsilon", o.epsilon, "Accuracy epsilon in (0, 1/2)");
  cmd->add_option("--algo", o.algos, "Pruning algorithm")->delimiter(',');
  cmd->add_option("--seeds", o.seeds, "Seed list, e.g. 1,2,3 or 1-5");
  cmd->add_flag("--shuffle-stream", o.shuffle_stream,
                "Shuffle the stream order of quick_prune");
}

void AddGenFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family,
                  "gnm, planted, interference, similarity or coverage");
  cmd->add_option("--n", o.n, "Ground set size");
  cmd->add_option("--m", o.m, "Edge count (gnm)");
  cmd->add_option("--blocks", o.blocks, "Community parameter (planted)");
  cmd->add_option("--block-mode", o.block_mode,
                  "Whether --blocks is a community 'count' or 'size'");
  cmd->add_option("--p-in", o.p_in, "Intra-community edge probability");
  cmd->add_option("--p-out", o.p_out, "Inter-community edge probability");
  cmd->add_option("--universe", o.universe, "Item universe size");
  cmd->add_option("--rows", o.rows, "Similarity rows");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Containment pruning for submodular maximization", "prunekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "prunekit 0.1.0");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  AddGenFlags(gen, o);
  gen->add_option("--seeds", o.seeds, "Seed (first value is used)");
  gen->add_option("--format", o.format, "json (objective spec) or native");
  gen->add_option("--out", o.out, "Output path (default stdout)");

  auto* prune = app.add_subcommand("prune", "Prune a ground set");
  AddObjectiveFlags(prune, o);
  AddPruneFlags(prune, o);
  prune->add_option("--costs", o.costs, "Costs CSV id,cost (knapsack)");
  prune->add_option("--budget", o.budget, "Master knapsack budget B");
  prune->add_option("--out", o.out, "Output path (default stdout)");

  auto* eval = app.add_subcommand("eval", "Containment report for a pruned set");
  AddObjectiveFlags(eval, o);
  AddPruneFlags(eval, o);
  eval->add_option("--pruned", o.pruned_path, "Report written by 'prune'");
  eval->add_flag("--full", o.full, "Evaluate P = N");
  eval->add_option("--reference", o.reference, "exact or greedy");
  eval->add_option("--costs", o.costs, "Costs CSV id,cost (knapsack)");
  eval->add_option("--budget", o.budget, "Master knapsack budget B");
  eval->add_option("--budgets-grid", o.budgets_grid,
                   "B' values: log, log:N or a comma list");
  eval->add_option("--out", o.out, "Output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Containment sweep over a grid");
  AddGenFlags(sweep, o);
  AddPruneFlags(sweep, o);
  sweep->add_option("--reference", o.reference, "exact or greedy");
  sweep->add_option("--jobs", o.jobs, "Worker threads");
  sweep->add_option("--csv", o.csv, "Also write the aggregate table as CSV");
  sweep->add_option("--out", o.out, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Submodularity and monotonicity");
  AddObjectiveFlags(check, o);
  check->add_option("--trials", o.trials, "Random trials (default 1000)");
  check->add_option("--seeds", o.seeds, "Seed (first value is used)");
  check->add_flag("--exhaustive", o.exhaustive, "Check every triple (n <= 14)");
  check->add_option("--out", o.out, "Output path (default stdout)");

  auto* sep = app.add_subcommand("separation", "Greedy vs SDG separation study");
  sep->add_option("--n", o.n, "Ground set size");
  sep->add_option("--universe", o.universe, "Item universe size");
  sep->add_option("--k", o.k, "Budget k");
  sep->add_option("--omega", o.omegas, "Integer pruning factor");
  sep->add_option("--trials", o.trials, "Instances");
  sep->add_option("--seeds", o.seeds, "Base seed");
  sep->add_option("--extraction", o.extraction, "exact or greedy");
  sep->add_option("--csv", o.csv, "Also write the table row as CSV");
  sep->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return ErrorRecord(err, kConfigError, "usage", e.what());
  }

  try {
    Report report;
    std::string name;
    if (gen->parsed()) {
      name = "gen";
      CmdGen(o, report);
    } else if (prune->parsed()) {
      name = "prune";
      CmdPrune(o, report);
    } else if (eval->parsed()) {
      name = "eval";
      CmdEval(o, report);
    } else if (sweep->parsed()) {
      name = "sweep";
      CmdSweep(o, report);
    } else if (check->parsed()) {
      name = "check";
      CmdCheck(o, report);
    } else {
      name = "separation";
      CmdSeparation(o, report);
    }
    Emit(name, report, o, out);
    return kOk;
  } catch (const ParseError& e) {
    return ErrorRecord(err, kParseError, "parse_error", e.what(),
                       Json{{"source", e.source()}, {"line", e.line()}});
  } catch (const GuardExceeded& e) {
    return ErrorRecord(err, kGuardExceeded, "guard_exceeded", e.what(),
                       Json{{"requested", e.requested()}, {"limit", e.limit()}});
  } catch (const ConfigError& e) {
    return ErrorRecord(err, kConfigError, "config_error", e.what());
  } catch (const std::exception& e) {
    return ErrorRecord(err, kConfigError, "config_error", e.what());
  }
}

}  // namespace prunekit::cli
