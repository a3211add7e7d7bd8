// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netshare/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "netshare/error.hpp"

namespace netshare {

namespace {

constexpr const char* kInstanceFormat = "netshare-instance";
constexpr const char* kReportFormat = "netshare-report";

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

Json optional_rat(const std::optional<Rat>& r) { return r ? rat_to_json(*r) : Json(nullptr); }

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) parse_fail("rational must be a string or an integer");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json cost_to_json(const CostTable& cost) {
  if (cost.n_max() <= kDenseCostLimit) {
    Json arr = Json::array();
    for (const Rat& v : cost.values()) arr.push_back(rat_to_json(v));
    return arr;
  }
  Json runs = Json::array();
  for (const auto& run : cost.runs()) runs.push_back(Json::array({run.count, rat_to_json(run.marginal)}));
  return Json{{"marginal_runs", runs}};
}

CostTable cost_from_json(const Json& j, long n_max) {
  if (j.is_array()) {
    if (static_cast<long>(j.size()) != n_max + 1) {
      parse_fail("cost array needs n_max + 1 entries");
    }
    std::vector<Rat> values;
    for (const Json& v : j) values.push_back(rat_from_json(v));
    return CostTable::from_values(values);
  }
  if (j.is_object() && j.contains("marginal_runs")) {
    std::vector<CostTable::Run> runs;
    for (const Json& r : field(j, "marginal_runs")) {
      if (!r.is_array() || r.size() != 2) parse_fail("marginal run must be [count, value]");
      runs.push_back({as_long(r[0], "run count"), rat_from_json(r[1])});
    }
    return CostTable::from_runs(n_max, std::move(runs));
  }
  parse_fail("cost must be an array or {\"marginal_runs\": ...}");
}

Json instance_to_json(const InstanceFile& file) {
  const GameInstance& in = file.instance;
  Json j;
  j["format"] = kInstanceFormat;
  j["version"] = kInstanceFormatVersion;
  Json vertices = Json::array();
  for (int v = 0; v < in.graph.num_vertices(); ++v) vertices.push_back(v);
  j["vertices"] = vertices;
  if (in.graph.source) j["source"] = *in.graph.source;
  if (in.graph.sink) j["sink"] = *in.graph.sink;
  j["n_max"] = in.n_max;
  Json edges = Json::array();
  for (const Edge& e : in.graph.edges()) {
    edges.push_back({{"id", e.id},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"cost", cost_to_json(in.costs[static_cast<size_t>(e.id)])}});
  }
  j["edges"] = edges;
  Json players = Json::array();
  for (const Player& p : in.players) {
    players.push_back({{"id", p.id}, {"source", p.source}, {"sink", p.sink}});
  }
  j["players"] = players;
  if (file.tree) j["sp_tree"] = sp_tree_to_json(*file.tree);
  if (file.protocol) j["protocol"] = {{"name", file.protocol->name}, {"params", file.protocol->params}};
  if (in.perturbation) {
    const auto& p = *in.perturbation;
    j["perturbation"] = {{"r", p.r},
                         {"k", p.k.get_str()},
                         {"window", p.window},
                         {"total_increment", rat_to_json(p.total_increment)}};
  }
  if (!in.metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [k, v] : in.metadata) meta[k] = v;
    j["metadata"] = meta;
  }
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("instance must be a JSON object");
  if (j.contains("format") && j["format"] != kInstanceFormat) parse_fail("not an instance file");
  if (j.contains("version") && as_long(j["version"], "version") != kInstanceFormatVersion) {
    parse_fail("unsupported instance version");
  }
  InstanceFile file;
  GameInstance& in = file.instance;

  const Json& vj = field(j, "vertices");
  int v_count = 0;
  if (vj.is_number_integer()) {
    v_count = static_cast<int>(vj.get<long>());
  } else if (vj.is_array()) {
    for (size_t i = 0; i < vj.size(); ++i) {
      if (as_long(vj[i], "vertex id") != static_cast<long>(i)) {
        parse_fail("vertex ids must be 0..V-1 in order");
      }
    }
    v_count = static_cast<int>(vj.size());
  } else {
    parse_fail("vertices must be a list or a count");
  }

  in.n_max = as_long(field(j, "n_max"), "n_max");
  if (in.n_max < 1) parse_fail("n_max must be positive");
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) parse_fail("edges must be a list");
  std::vector<Edge> edges;
  std::vector<std::pair<EdgeId, CostTable>> costs;
  for (const Json& e : ej) {
    Edge edge{static_cast<EdgeId>(as_long(field(e, "id"), "edge id")),
              static_cast<VertexId>(as_long(field(e, "tail"), "tail")),
              static_cast<VertexId>(as_long(field(e, "head"), "head"))};
    edges.push_back(edge);
    costs.emplace_back(edge.id, cost_from_json(field(e, "cost"), in.n_max));
  }
  in.graph = Graph(v_count, edges);
  std::sort(costs.begin(), costs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& c : costs) in.costs.push_back(std::move(c.second));
  if (j.contains("source")) in.graph.source = static_cast<VertexId>(as_long(j["source"], "source"));
  if (j.contains("sink")) in.graph.sink = static_cast<VertexId>(as_long(j["sink"], "sink"));

  const Json& pj = field(j, "players");
  if (!pj.is_array()) parse_fail("players must be a list");
  for (size_t i = 0; i < pj.size(); ++i) {
    const Json& p = pj[i];
    Player player;
    player.id = p.contains("id") ? static_cast<int>(as_long(p["id"], "player id"))
                                 : static_cast<int>(i);
    player.source = static_cast<VertexId>(as_long(field(p, "source"), "player source"));
    player.sink = static_cast<VertexId>(as_long(field(p, "sink"), "player sink"));
    in.players.push_back(player);
  }
  if (j.contains("perturbation")) {
    const Json& p = j["perturbation"];
    PerturbationRecord rec;
    rec.r = as_long(field(p, "r"), "r");
    const Json& kj = field(p, "k");
    if (!kj.is_string() || rec.k.set_str(kj.get<std::string>(), 10) != 0) {
      parse_fail("perturbation k must be a decimal string");
    }
    rec.window = as_long(field(p, "window"), "window");
    rec.total_increment = rat_from_json(field(p, "total_increment"));
    in.perturbation = rec;
  }
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) parse_fail("metadata values must be strings");
      in.metadata[k] = v.get<std::string>();
    }
  }
  in.validate();
  if (j.contains("sp_tree")) file.tree = parse_sp_tree(in.graph, j["sp_tree"]);
  if (j.contains("protocol")) {
    const Json& p = j["protocol"];
    const Json& name = field(p, "name");
    if (!name.is_string()) parse_fail("protocol name must be a string");
    ProtocolSpec spec{name.get<std::string>(), p.contains("params") ? p["params"] : Json::object()};
    file.protocol = spec;
  }
  return file;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail("'" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

void write_instance_file(const std::string& path, const InstanceFile& file) {
  write_json_file(path, instance_to_json(file));
}

std::string instance_digest(const InstanceFile& file) {
  const std::string text = instance_to_json(file).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json path_to_json(const Path& path) { return Json(path); }

Json profile_to_json(const StrategyProfile& profile) {
  Json arr = Json::array();
  for (const Path& p : profile.paths) arr.push_back(path_to_json(p));
  return arr;
}

StrategyProfile profile_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("profile must be a list of paths");
  StrategyProfile s;
  for (const Json& p : j) {
    if (!p.is_array()) parse_fail("path must be a list of edge ids");
    Path path;
    for (const Json& e : p) path.push_back(static_cast<EdgeId>(as_long(e, "edge id")));
    s.paths.push_back(std::move(path));
  }
  return s;
}

Json report_to_json(const AnalysisReport& report, const InstanceFile& file,
                    const EnumerationOptions& options) {
  Json j;
  j["format"] = kReportFormat;
  j["version"] = kInstanceFormatVersion;
  j["instance_digest"] = instance_digest(file);
  j["protocol"] = protocol_name(report.protocol);
  j["mode"] = "enumerate";
  j["overcharged"] = report.overcharged;
  j["no_equilibrium"] = report.no_equilibrium();
  j["pne_count"] = report.pne.size();
  Json pne = Json::array();
  for (const auto& s : report.pne) pne.push_back(profile_to_json(s));
  j["pne"] = pne;
  j["costs"] = {{"worst_eq", optional_rat(report.worst_eq_cost)},
                {"best_eq", optional_rat(report.best_eq_cost)},
                {"opt", rat_to_json(report.opt_cost)}};
  j["opt_profile"] = profile_to_json(report.opt_profile);
  if (report.poa) {
    j["poa"] = {{"exact", rat_to_json(*report.poa)}, {"decimal", report.poa->decimal(12)}};
  } else {
    j["poa"] = nullptr;
  }
  if (report.eps) {
    j["eps_accounting"] = {{"eps1", rat_to_json(report.eps->eps1)},
                           {"eps2", rat_to_json(report.eps->eps2)}};
  } else {
    j["eps_accounting"] = nullptr;
  }
  j["tie_detector_hits"] = report.tie_detector_hits;
  j["stats"] = {{"profiles_scanned", report.profiles_scanned},
                {"max_profiles", options.max_profiles},
                {"max_paths", options.max_paths}};
  return j;
}

Json brd_to_json(const BrdResult& result, const Rat& final_cost, const InstanceFile& file,
                 const std::string& protocol) {
  Json j;
  j["format"] = kReportFormat;
  j["version"] = kInstanceFormatVersion;
  j["instance_digest"] = instance_digest(file);
  j["protocol"] = protocol;
  j["mode"] = "brd";
  j["converged"] = result.converged;
  j["cycled"] = result.cycled;
  j["profile"] = profile_to_json(result.profile);
  j["cost"] = rat_to_json(final_cost);
  Json trace = Json::array();
  for (const NashWitness& w : result.trace) {
    trace.push_back({{"player", w.player},
                     {"from", path_to_json(w.from)},
                     {"to", path_to_json(w.to)},
                     {"old_total", rat_to_json(w.old_total)},
                     {"new_total", rat_to_json(w.new_total)}});
  }
  j["trace"] = trace;
  j["tie_detector_hits"] = result.tie_hits;
  return j;
}

}  // namespace netshare
