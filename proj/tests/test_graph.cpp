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

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "netshare/error.hpp"
#include "netshare/generators.hpp"
#include "netshare/graph.hpp"
#include "netshare/verify.hpp"

namespace netshare {
namespace {

Graph diamond() { return Graph(4, {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 2, 3}}); }

TEST_CASE("topo_sort") {
  CHECK(topo_sort(Graph(2, {{0, 0, 1}})) == std::vector<VertexId>{0, 1});
  CHECK(topo_sort(diamond()) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK_THROWS_AS(topo_sort(Graph(2, {{0, 0, 1}, {1, 1, 0}})), Error);
  try {
    topo_sort(Graph(2, {{0, 0, 1}, {1, 1, 0}}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCycleDetected);
  }
}

TEST_CASE("topo_sort breaks ties by vertex id") {
  // 3 and 1 are both ready after 0; 1 goes first.
  const Graph g(4, {{0, 0, 3}, {1, 0, 1}, {2, 1, 2}});
  CHECK(topo_sort(g) == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("graph rejects sparse edge ids and bad endpoints") {
  CHECK_THROWS_AS(Graph(2, {{1, 0, 1}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 0, 2}}), Error);
}

TEST_CASE("assign_weights") {
  const WeightAssignment single = assign_weights(Graph(2, {{0, 0, 1}}));
  CHECK(single.omega == std::vector<long>{0, 1});
  CHECK(single.w == std::vector<long>{1});

  const WeightAssignment d = assign_weights(diamond());
  CHECK(d.omega == std::vector<long>{0, 1, 2, 3});
  CHECK(d.w == std::vector<long>{1, 2, 2, 1});
  CHECK(d.w[0] + d.w[2] == 3);
  CHECK(d.w[1] + d.w[3] == 3);

  // s -> a -> t plus shortcut s -> t.
  const WeightAssignment chain = assign_weights(Graph(3, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}}));
  CHECK(chain.w[2] == 2);
  CHECK(chain.w[2] == chain.w[0] + chain.w[1]);
}

TEST_CASE("enumerate_paths") {
  const Graph two(2, {{0, 0, 1}, {1, 0, 1}});
  CHECK(enumerate_paths(two, 0, 1) == std::vector<Path>{{0}, {1}});

  // Braess skeleton s=0, u=1, v=2, t=3: s->u, s->v, v->u, u->t, v->t.
  const Graph braess(4, {{0, 0, 1}, {1, 0, 2}, {2, 2, 1}, {3, 1, 3}, {4, 2, 3}});
  const auto paths = enumerate_paths(braess, 0, 3);
  CHECK(paths == std::vector<Path>{{0, 3}, {1, 2, 3}, {1, 4}});

  const Graph split(4, {{0, 0, 1}, {1, 2, 3}});
  CHECK(enumerate_paths(split, 0, 3).empty());
}

TEST_CASE("enumerate_paths honours the cap") {
  // Chain of 12 parallel pairs: 4096 paths.
  std::vector<Edge> edges;
  for (int i = 0; i < 12; ++i) {
    edges.push_back({2 * i, i, i + 1});
    edges.push_back({2 * i + 1, i, i + 1});
  }
  const Graph g(13, edges);
  CHECK(enumerate_paths(g, 0, 12, 4096).size() == 4096);
  try {
    enumerate_paths(g, 0, 12, 4095);
    FAIL("expected PathExplosion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPathExplosion);
  }
}

TEST_CASE("random DAG properties") {
  for (int i = 0; i < 100; ++i) {
    GenParams p = testing::random_params("random-dag", "constant", derive_seed(9, 1, i));
    p.max_vertices = 10;
    p.max_edges = 20;
    p.n_max = 1;
    const GameInstance in = generate(p).instance;
    const Graph& g = in.graph;
    // Deterministic ordering and weights.
    CHECK(topo_sort(g) == topo_sort(g));
    const WeightAssignment w1 = assign_weights(g);
    const WeightAssignment w2 = assign_weights(g);
    CHECK(w1.omega == w2.omega);
    CHECK(w1.w == w2.w);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto paths = enumerate_paths(g, u, v);
        std::set<Path> unique(paths.begin(), paths.end());
        CHECK(unique.size() == paths.size());
        CHECK(std::is_sorted(paths.begin(), paths.end()));
        for (const Path& path : paths) {
          CHECK(is_path(g, path, u, v));
          long sum = 0;
          for (EdgeId e : path) sum += w1.w[static_cast<size_t>(e)];
          CHECK(sum == w1.omega[static_cast<size_t>(v)] - w1.omega[static_cast<size_t>(u)]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace netshare
