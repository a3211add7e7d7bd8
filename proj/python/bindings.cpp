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
// Python bindings. Instances, profiles and reports cross the boundary as JSON
// text in the on-disk format; the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "netshare/analysis.hpp"
#include "netshare/cost.hpp"
#include "netshare/error.hpp"
#include "netshare/generators.hpp"
#include "netshare/io.hpp"
#include "netshare/verify.hpp"

namespace py = pybind11;

namespace {

using netshare::Json;

netshare::InstanceFile parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw netshare::Error(netshare::ErrorKind::kParse, e.what());
  }
  return netshare::instance_from_json(j);
}

netshare::EnumerationOptions options(std::uint64_t max_profiles, std::size_t max_paths,
                                     int threads) {
  return {max_profiles, max_paths, threads};
}

std::string generate(const std::string& family, long n, long k, const std::string& c,
                     int digits, std::uint64_t seed, long n_max, long players,
                     const std::string& shape, int max_vertices, int max_edges, bool multicast,
                     std::uint64_t max_profile_space) {
  netshare::GenParams p;
  p.family = family;
  p.n = n;
  p.k = k;
  p.c = netshare::Rat::parse(c);
  p.digits = digits;
  p.seed = seed;
  p.n_max = n_max;
  p.players = players;
  p.shape = shape;
  p.max_vertices = max_vertices;
  p.max_edges = max_edges;
  p.multicast = multicast;
  p.max_profiles = max_profile_space;
  netshare::Generated g = netshare::generate(p);
  return netshare::instance_to_json({std::move(g.instance), std::move(g.tree), std::nullopt})
      .dump();
}

py::tuple analyze(const std::string& instance, const std::string& protocol,
                  const std::string& mode, long max_iters, long perturb,
                  const std::optional<std::string>& strictify, std::uint64_t max_profiles,
                  std::size_t max_paths, int threads) {
  netshare::AnalyzeRequest req;
  req.protocol = protocol;
  req.mode = mode;
  req.max_iters = max_iters;
  req.perturb = perturb;
  if (strictify) req.strictify = netshare::Rat::parse(*strictify);
  req.options = options(max_profiles, max_paths, threads);
  const netshare::InstanceFile file = parse_instance(instance);
  netshare::AnalyzeOutcome out;
  {
    py::gil_scoped_release release;
    out = netshare::analyze(file, req);
  }
  return py::make_tuple(out.report.dump(), out.tie_detected, out.missing_equilibrium);
}

std::string nash_check(const std::string& instance, const std::string& protocol,
                       const std::string& profile, std::size_t max_paths) {
  const netshare::InstanceFile file = parse_instance(instance);
  const netshare::StrategyProfile s = netshare::profile_from_json(Json::parse(profile));
  return netshare::nash_check(file, protocol, s, max_paths).dump();
}

std::string verify(const std::string& suite, std::uint64_t seed, std::uint64_t max_profiles,
                   std::size_t max_paths, int threads) {
  netshare::SuiteResult res;
  {
    py::gil_scoped_release release;
    res = netshare::run_suite(suite, seed, options(max_profiles, max_paths, threads));
  }
  return netshare::suite_to_json(res).dump();
}

std::vector<std::vector<int>> paths(const std::string& instance, int source, int sink,
                                    std::size_t max_paths) {
  const netshare::InstanceFile file = parse_instance(instance);
  const netshare::Graph& g = file.instance.graph;
  if (!g.has_vertex(source) || !g.has_vertex(sink)) {
    throw netshare::Error(netshare::ErrorKind::kBadParams, "unknown vertex");
  }
  return netshare::enumerate_paths(g, source, sink, max_paths);
}

std::string perturb(const std::string& instance, long r) {
  netshare::InstanceFile file = parse_instance(instance);
  file.instance = netshare::perturb_for_ties(file.instance, r);
  return netshare::instance_to_json(file).dump();
}

py::dict classify(const std::vector<std::string>& values) {
  std::vector<netshare::Rat> v;
  for (const auto& s : values) v.push_back(netshare::Rat::parse(s));
  const netshare::CostShape shape = netshare::classify(netshare::CostTable::from_values(v));
  py::dict d;
  d["concave"] = shape.concave;
  d["strictly_concave"] = shape.strictly_concave;
  d["convex"] = shape.convex;
  d["constant"] = shape.constant;
  d["capacitated"] = shape.capacitated;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "netshare core bindings";
  py::register_exception<netshare::Error>(m, "NetshareError", PyExc_RuntimeError);

  m.def("generate", &generate, py::arg("family"), py::arg("n") = 5, py::arg("k") = 6,
        py::arg("c") = "1", py::arg("digits") = 12, py::arg("seed") = 42, py::arg("n_max") = 0,
        py::arg("players") = 0, py::arg("shape") = "concave", py::arg("max_vertices") = 6,
        py::arg("max_edges") = 10, py::arg("multicast") = false,
        py::arg("max_profile_space") = 0);
  m.def("analyze", &analyze, py::arg("instance"), py::arg("protocol") = "",
        py::arg("mode") = "enumerate", py::arg("max_iters") = 1000, py::arg("perturb") = 3,
        py::arg("strictify") = std::nullopt,
        py::arg("max_profiles") = netshare::kDefaultMaxProfiles,
        py::arg("max_paths") = netshare::kDefaultMaxPaths, py::arg("threads") = 1);
  m.def("nash_check", &nash_check, py::arg("instance"), py::arg("protocol"),
        py::arg("profile"), py::arg("max_paths") = netshare::kDefaultMaxPaths);
  m.def("verify", &verify, py::arg("suite"), py::arg("seed") = 42,
        py::arg("max_profiles") = netshare::kDefaultMaxProfiles,
        py::arg("max_paths") = netshare::kDefaultMaxPaths, py::arg("threads") = 1);
  m.def("paths", &paths, py::arg("instance"), py::arg("source"), py::arg("sink"),
        py::arg("max_paths") = netshare::kDefaultMaxPaths);
  m.def("perturb", &perturb, py::arg("instance"), py::arg("r") = 3);
  m.def("digest", [](const std::string& instance) {
    return netshare::instance_digest(parse_instance(instance));
  });
  m.def("classify", &classify, py::arg("values"));
  m.def("family_names", &netshare::family_names);
}
