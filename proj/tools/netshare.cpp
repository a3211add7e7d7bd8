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

// netshare command-line tool: gen, analyze, verify, paths.
//
// Exit codes: 0 ok, 2 bad input, 3 cap exceeded, 4 verification failure or
// no equilibrium for a protocol that guarantees one, 5 tie detected.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netshare/analysis.hpp"
#include "netshare/engine.hpp"
#include "netshare/error.hpp"
#include "netshare/generators.hpp"
#include "netshare/io.hpp"
#include "netshare/protocols.hpp"
#include "netshare/verify.hpp"

namespace {

using netshare::Json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;
constexpr int kExitTie = 5;

struct Globals {
  std::uint64_t max_profiles = netshare::kDefaultMaxProfiles;
  std::size_t max_paths = netshare::kDefaultMaxPaths;
  int threads = 1;
  std::uint64_t seed = 42;
  std::string out;

  netshare::EnumerationOptions options() const { return {max_profiles, max_paths, threads}; }
};

void emit(const Globals& g, const Json& j) {
  if (g.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    netshare::write_json_file(g.out, j);
  }
}

struct GenArgs {
  netshare::GenParams params;
  std::string c = "1";
};

int cmd_gen(const Globals& g, GenArgs args) {
  args.params.seed = g.seed;
  args.params.c = netshare::Rat::parse(args.c);
  netshare::Generated gen = netshare::generate(args.params);
  netshare::InstanceFile file{std::move(gen.instance), std::move(gen.tree), std::nullopt};
  emit(g, netshare::instance_to_json(file));
  return kExitOk;
}

struct AnalyzeArgs {
  std::string instance;
  netshare::AnalyzeRequest request;
  std::string strictify;
};

int cmd_analyze(const Globals& g, AnalyzeArgs args) {
  const netshare::InstanceFile file = netshare::read_instance_file(args.instance);
  if (!args.strictify.empty()) args.request.strictify = netshare::Rat::parse(args.strictify);
  args.request.options = g.options();
  const netshare::AnalyzeOutcome out = netshare::analyze(file, args.request);
  emit(g, out.report);
  if (out.tie_detected) return kExitTie;
  if (out.missing_equilibrium) return kExitVerify;
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  netshare::SuiteResult res = netshare::run_suite(suite, g.seed, g.options());
  emit(g, netshare::suite_to_json(res));
  for (const auto& c : res.checks) {
    std::cerr << (c.pass ? "PASS" : "FAIL") << " criterion " << c.criterion << ": " << c.name
              << ": " << c.detail << '\n';
  }
  return res.passed() ? kExitOk : kExitVerify;
}

int cmd_paths(const Globals& g, const std::string& path, std::optional<int> source,
              std::optional<int> sink) {
  netshare::InstanceFile file = netshare::read_instance_file(path);
  const auto& in = file.instance;
  std::vector<std::pair<int, int>> pairs;
  if (source && sink) {
    pairs.push_back({*source, *sink});
  } else {
    for (const auto& p : in.players) {
      std::pair<int, int> key{p.source, p.sink};
      if (std::find(pairs.begin(), pairs.end(), key) == pairs.end()) pairs.push_back(key);
    }
  }
  Json out = Json::array();
  for (auto [s, t] : pairs) {
    if (!in.graph.has_vertex(s) || !in.graph.has_vertex(t)) {
      throw netshare::Error(netshare::ErrorKind::kBadParams, "unknown vertex");
    }
    Json paths = Json::array();
    for (const auto& p : netshare::enumerate_paths(in.graph, s, t, g.max_paths)) {
      paths.push_back(netshare::path_to_json(p));
    }
    out.push_back({{"source", s}, {"sink", t}, {"count", paths.size()}, {"paths", paths}});
  }
  emit(g, out);
  return kExitOk;
}

int exit_code_for(const netshare::Error& e) {
  switch (e.kind()) {
    case netshare::ErrorKind::kPathExplosion:
      return kExitCap;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network cost-sharing game engine"};
  app.require_subcommand(1);
  // Global flags are accepted before or after the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--max-profiles", g.max_profiles, "Profile enumeration cap");
  app.add_option("--max-paths", g.max_paths, "Path enumeration cap per player");
  app.add_option("--threads", g.threads, "Enumeration worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for random families and suites");
  app.add_option("--out", g.out, "Write JSON here instead of stdout");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.params.family, "Instance family")->required();
  gen_cmd->add_option("--n", gen.params.n, "Family size parameter n");
  gen_cmd->add_option("--k", gen.params.k, "Static-share parameter k");
  gen_cmd->add_option("--c", gen.c, "Hub cost c as p/q or decimal");
  gen_cmd->add_option("--digits", gen.params.digits, "Digits of irrational approximations");
  gen_cmd->add_option("--players", gen.params.players, "Number of players");
  gen_cmd->add_option("--n-max", gen.params.n_max, "Player universe size");
  gen_cmd->add_option("--shape", gen.params.shape, "Cost shape of random families");
  gen_cmd->add_option("--max-vertices", gen.params.max_vertices, "Random DAG vertex bound");
  gen_cmd->add_option("--max-edges", gen.params.max_edges, "Random edge bound");
  gen_cmd->add_flag("--multicast", gen.params.multicast, "Random sources, common sink");
  gen_cmd->add_option("--max-profile-space", gen.params.max_profiles,
                      "Redraw random instances until the profile space fits");

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Enumerate equilibria and report the PoA");
  an_cmd->add_option("instance", an.instance, "Instance file")->required();
  an_cmd->add_option("--protocol", an.request.protocol,
                     "equal-split | incremental | leader-based | static-share | spg | nwa");
  an_cmd->add_option("--mode", an.request.mode, "enumerate | brd");
  an_cmd->add_option("--max-iters", an.request.max_iters, "Best-response step limit");
  an_cmd->add_option("--perturb", an.request.perturb, "Decimal places r for nwa tie breaking");
  an_cmd->add_option("--strictify", an.strictify, "Make costs strictly concave (spg), eps");

  std::string suite;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("--suite", suite, "paper-facts | properties")->required();

  std::string paths_file;
  std::optional<int> source;
  std::optional<int> sink;
  auto* paths_cmd = app.add_subcommand("paths", "Dump enumerated paths");
  paths_cmd->add_option("instance", paths_file, "Instance file")->required();
  paths_cmd->add_option("--source", source, "Source vertex");
  paths_cmd->add_option("--sink", sink, "Sink vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen);
    if (*an_cmd) return cmd_analyze(g, an);
    if (*ver_cmd) return cmd_verify(g, suite);
    if (*paths_cmd) return cmd_paths(g, paths_file, source, sink);
  } catch (const netshare::Error& e) {
    std::cerr << "netshare: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitBadInput;
}
