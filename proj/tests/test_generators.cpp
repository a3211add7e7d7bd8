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
#include "doctest.h"
#include "helpers.hpp"
#include "netshare/engine.hpp"
#include "netshare/generators.hpp"
#include "netshare/io.hpp"
#include "netshare/profile.hpp"

namespace netshare {
namespace {

using testing::error_kind;
using testing::R;

EdgeId find_edge(const Graph& g, VertexId tail, VertexId head) {
  for (const Edge& e : g.edges()) {
    if (e.tail == tail && e.head == head) return e.id;
  }
  FAIL("missing edge " << tail << "->" << head);
  return -1;
}

TEST_CASE("multicast constant instance") {
  const GameInstance in = gen_multicast_const_lb(5, Rat(1));
  CHECK(in.graph.num_vertices() == 7);
  CHECK(in.multicast());
  CHECK_FALSE(in.symmetric());
  CHECK(brute_force_optimum(in).cost == Rat(1));
  StrategyProfile direct;
  for (long i = 0; i < 5; ++i) direct.paths.push_back({static_cast<EdgeId>(2 * i)});
  CHECK(profile_cost(direct, in.graph, in.costs) == Rat(5));
}

TEST_CASE("sqrt_approx") {
  CHECK(sqrt_approx(25, 12) == Rat(5));
  const Rat q = sqrt_approx(2, 12);
  CHECK(q * q < Rat(2));
  CHECK(Rat(2) - q * q < Rat(3) * Rat::pow10(-12));
}

TEST_CASE("capacitated ladder") {
  const long n = 4;
  const GameInstance in = gen_dag_convex_lb(n);
  CHECK(in.players.size() == 5);
  CHECK(brute_force_optimum(in).cost == Rat(5));
  CHECK(brute_force_optimum(gen_dag_convex_lb(n, n)).cost == Rat(1));
  StrategyProfile straight;
  const VertexId s = 0;
  const VertexId t = 2 * n + 1;
  for (long i = 1; i <= n; ++i) {
    const VertexId v = static_cast<VertexId>(i);
    const VertexId u = static_cast<VertexId>(n + i);
    straight.paths.push_back({find_edge(in.graph, s, v), find_edge(in.graph, v, u),
                              find_edge(in.graph, u, t)});
  }
  const GameInstance four = gen_dag_convex_lb(n, n);
  check_profile(four, straight);
  CHECK(profile_cost(straight, four.graph, four.costs) == Rat(4));
}

TEST_CASE("overcharge instance arithmetic") {
  const GameInstance in = gen_overcharge_lb(12);
  const Rat q = overcharge_q(in);
  CHECK(brute_force_optimum(in).cost == Rat(2) * q + Rat(1));
  CHECK(brute_force_optimum(in.with_player_count(2)).cost == Rat(1));
  const Rat gap = (q + Rat(2)) / (Rat(2) * q + Rat(1)) - Rat(2) * q;
  CHECK(max(gap, -gap) < Rat::pow10(-9));
  CHECK(error_kind([] { gen_overcharge_lb(5); }) == ErrorKind::kBadParams);
}

TEST_CASE("static-share instance") {
  CHECK(error_kind([] { gen_static_share_lb(5); }) == ErrorKind::kKTooSmall);
  const long k = 6;
  const GameInstance in = gen_static_share_lb(k);
  CHECK(in.graph.num_edges() == 4 + 64);
  CHECK(in.n_max == 4096 * 36);
  CHECK(static_share_cost(k, 1, 7) == Rat(7, 36) + Rat::pow10(-16));
  CHECK(in.costs[4].at(7) == static_share_cost(k, 1, 7));
  CHECK(static_share_lstar(k) == 12009);
  for (long j = 1; j < 64; ++j) {
    for (long l = 1; l <= (j + 1) * k; ++l) {
      CHECK(static_share_cost(k, j, l) < static_share_cost(k, j + 1, l));
    }
  }
  const OptTable opt = opt_path_table(in, 3 * k);
  for (long l = 1; l <= k; ++l) CHECK(opt.at(l) == Path{0, 3});
  CHECK(opt.at(k + 1) == Path{4, 2});
  CHECK(opt.at(2 * k + 1) == Path{5, 2});
}

TEST_CASE("two-source ladder") {
  const long n = 4;
  const GameInstance in = gen_multicast_convex_lb(n);
  CHECK(in.players.size() == static_cast<size_t>(n + 1));
  CHECK(in.multicast());
  CHECK(brute_force_optimum(in).cost == Rat(n + 2));
  CHECK(brute_force_optimum(in.with_players({static_cast<int>(n)})).cost == Rat(1));
}

TEST_CASE("random families") {
  GenParams dag = testing::random_params("random-dag", "strictly-concave", 5);
  dag.n_max = 4;
  dag.players = 3;
  const Generated a = generate(dag);
  const Generated b = generate(dag);
  CHECK(a.instance.graph == b.instance.graph);
  CHECK(a.instance.costs == b.instance.costs);
  for (const CostTable& c : a.instance.costs) CHECK(classify(c).strictly_concave);
  dag.seed = 6;
  CHECK_FALSE(generate(dag).instance.costs == a.instance.costs);

  GenParams spg = testing::random_params("random-spg", "convex", 5);
  spg.n_max = 4;
  const Generated g = generate(spg);
  REQUIRE(g.tree.has_value());
  for (EdgeId e = 0; e < g.instance.graph.num_edges(); ++e) {
    CHECK(g.tree->node(g.tree->leaf_of(e)).edge == e);
    CHECK(classify(g.instance.costs[static_cast<size_t>(e)]).convex);
  }

  GenParams multi = testing::random_params("random-dag", "concave", 9);
  multi.multicast = true;
  multi.players = 3;
  multi.n_max = 3;
  CHECK(generate(multi).instance.multicast());

  GenParams capped = testing::random_params("random-dag", "concave", 10);
  capped.max_profiles = 50;
  capped.players = 3;
  capped.n_max = 3;
  CHECK(strategy_space(generate(capped).instance).profile_count(50) <= 50);
}

TEST_CASE("family dispatch") {
  CHECK(family_names().size() == 7);
  GenParams bad;
  bad.family = "petersen";
  CHECK(error_kind([&] { generate(bad); }) == ErrorKind::kBadParams);
  GenParams mc;
  mc.family = "multicast-const-lb";
  mc.n = 5;
  CHECK(generate(mc).instance.graph.num_vertices() == 7);
}

}  // namespace
}  // namespace netshare
