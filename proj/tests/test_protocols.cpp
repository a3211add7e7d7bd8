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
#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "netshare/generators.hpp"
#include "netshare/profile.hpp"
#include "netshare/protocols.hpp"

namespace netshare {
namespace {

using Json = nlohmann::ordered_json;
using testing::error_kind;
using testing::make_instance;
using testing::R;
using testing::table;

// One s->t edge used by players with the given ids.
GameInstance single_edge(const CostTable& cost, std::vector<int> ids) {
  GameInstance in = make_instance(2, {{0, 0, 1}}, {cost}, 1, 0, 1);
  in.players.clear();
  for (int id : ids) in.players.push_back({id, 0, 1});
  in.validate();
  return in;
}

StrategyProfile all_on(const GameInstance& in, const Path& path) {
  return StrategyProfile{std::vector<Path>(in.players.size(), path)};
}

StrategyProfile random_profile(const GameInstance& in, std::mt19937_64& rng) {
  StrategyProfile s;
  for (const Player& p : in.players) {
    const std::vector<Path> paths = enumerate_paths(in.graph, p.source, p.sink);
    s.paths.push_back(paths[rng() % paths.size()]);
  }
  return s;
}

TEST_CASE("leader examples") {
  const GameInstance in = make_instance(2, {{0, 0, 1}, {1, 0, 1}},
                                        {table({0, 1, 2}), table({0, 1, 2})}, 2, 0, 1);
  GameInstance ids = in;
  ids.players = {{5, 0, 1}, {2, 0, 1}};
  CHECK(leader(ids, all_on(ids, {0}), 0) == 2);
  CHECK_FALSE(leader(ids, all_on(ids, {0}), 1).has_value());
  GameInstance one = in;
  one.players = {{7, 0, 1}};
  CHECK(leader(one, all_on(one, {1}), 1) == 7);
}

TEST_CASE("equal_split examples") {
  const GameInstance two = single_edge(table({0, 1, 3}), {0, 1});
  const ShareMatrix m = equal_split_shares(two, all_on(two, {0}));
  CHECK(m.xi[0][0] == R("3/2"));
  CHECK(m.xi[1][0] == R("3/2"));
  const GameInstance one = single_edge(table({0, 1, 3}), {0});
  CHECK(equal_split_shares(one, all_on(one, {0})).xi[0][0] == Rat(1));
  const GameInstance cap = single_edge(CostTable::capacitated_constant(2, Rat(1), 1), {0, 1});
  CHECK(equal_split_shares(cap, all_on(cap, {0})).xi[1][0].is_inf());
}

TEST_CASE("incremental examples") {
  const GameInstance a = single_edge(table({0, 1, 4, 9}), {1, 2});
  const ShareMatrix ma = incremental_shares(a, all_on(a, {0}));
  CHECK(ma.xi[0][0] == Rat(1));
  CHECK(ma.xi[1][0] == Rat(3));
  const GameInstance b = single_edge(table({0, 2, 5}), {8, 3});
  const ShareMatrix mb = incremental_shares(b, all_on(b, {0}));
  CHECK(mb.xi[1][0] == Rat(2));
  CHECK(mb.xi[0][0] == Rat(3));
}

TEST_CASE("leader_based examples") {
  const GameInstance in = single_edge(table({0, 4, 6, 9}), {0, 1, 2});
  LeaderShareRule rule{{{Rat(0), Rat(4), Rat(6), Rat(3)}}};
  const ShareMatrix m = leader_based_shares(in, all_on(in, {0}), rule);
  CHECK(m.xi[0][0] == Rat(3));
  CHECK(m.xi[1][0] == Rat(3));
  CHECK(m.xi[2][0] == Rat(3));

  LeaderShareRule full{{{Rat(0), Rat(4), Rat(6), Rat(9)}}};
  const ShareMatrix f = leader_based_shares(in, all_on(in, {0}), full);
  CHECK(f.xi[0][0] == Rat(9));
  CHECK(f.xi[2][0] == Rat(0));

  const GameInstance solo = single_edge(table({0, 4, 6, 9}), {0});
  CHECK(leader_based_shares(solo, all_on(solo, {0}), rule).xi[0][0] == Rat(4));

  LeaderShareRule bad{{{Rat(0), Rat(5), Rat(6), Rat(9)}}};
  CHECK(error_kind([&] { (void)LeaderBased(in, bad); }) == ErrorKind::kShareExceedsCost);
}

TEST_CASE("static_share_rule examples") {
  const GameInstance in = make_instance(2, {{0, 0, 1}, {1, 0, 1}},
                                        {table({0, 1, 2, 3}), table({0, 2, 2, 2})}, 1, 0, 1);
  const OptTable opt = opt_path_table(in);
  const LeaderShareRule rule = static_share_rule(in, opt, {Rat(1), R("3/2")});
  CHECK(rule.psi[0][2] == Rat(1));
  CHECK(rule.psi[1][1] == Rat(2));
  CHECK(rule.psi[1][3] == R("3/2"));
  CHECK(rule.psi[0][3] == Rat(3));
  CHECK(error_kind([&] { static_share_rule(in, opt, {Rat(2), Rat(1)}); }) ==
        ErrorKind::kShareExceedsCost);
}

TEST_CASE("spg shares examples") {
  GameInstance s = make_instance(3, {{0, 0, 1}, {1, 1, 2}}, {table({0, 4, 6}), table({0, 2, 3})},
                                 2, 0, 2);
  const SPTree t = parse_sp_tree(s.graph, Json::parse(R"(["S", {"edge":0}, {"edge":1}])"));
  const SpgBuild b = make_spg(s, t);
  const ShareMatrix m = compute_shares(*b.protocol, all_on(s, {0, 1}));
  CHECK(m.player_total(0) == Rat(6));
  CHECK(m.player_total(1) == Rat(3));
  CHECK(spg_protocol_shares(s, all_on(s, {0, 1}), b.annotations, b.protocol->opt()).xi ==
        m.xi);

  const GameInstance solo = s.with_player_count(1);
  const SpgBuild sb = make_spg(solo, t);
  CHECK(compute_shares(*sb.protocol, all_on(solo, {0, 1})).player_total(0) == Rat(6));

  // Edge 1 is off OPT(2); its leader pays the whole cost.
  GameInstance p = make_instance(2, {{0, 0, 1}, {1, 0, 1}},
                                 {table({0, 1, 2}), table({0, 2, 3})}, 2, 0, 1);
  p.players = {{1, 0, 1}, {4, 0, 1}};
  const SPTree pt = parse_sp_tree(p.graph, Json::parse(R"(["P", {"edge":0}, {"edge":1}])"));
  const ShareMatrix pm = compute_shares(*make_spg(p, pt).protocol, all_on(p, {1}));
  CHECK(pm.xi[0][1] == Rat(3));
  CHECK(pm.xi[1][1] == Rat(0));
}

TEST_CASE("nwa eps_e arithmetic") {
  NwaContext ctx;
  ctx.weights.w = {1};
  ctx.big_c = Rat(10);
  ctx.eps = R("1/100");
  CHECK(R("3/2") + ctx.eps_e(0, R("3/2")) == R("3/2") + R("17/2000"));
}

TEST_CASE("nwa share examples") {
  const GameInstance in = single_edge(table({0, 2, 3, 4}), {1, 2, 5});
  const Nwa nwa(in);
  const NwaContext& ctx = nwa.context();
  CHECK(ctx.big_c > Rat(2) * Rat(4));
  CHECK(ctx.eps < Rat(2) / Rat(ctx.weights.w[0]));
  const ShareMatrix m = nwa_shares(nwa, all_on(in, {0}));
  CHECK(m.xi[1][0] == Rat(2));
  CHECK(m.xi[2][0] == Rat(2));
  CHECK(m.xi[0][0] == ctx.eps_e(0, Rat(2)));
  CHECK(m.edge_total(0) == ctx.hat[0][3]);
  CHECK(nwa.share(0, 1, 0) == Rat(4));
  CHECK(ctx.hat[0][1] == Rat(4));

  GameInstance p = make_instance(2, {{0, 0, 1}, {1, 0, 1}},
                                 {table({0, 1, 2}), table({0, 2, 3})}, 2, 0, 1);
  p.players = {{1, 0, 1}, {9, 0, 1}};
  const Nwa pn(p);
  const ShareMatrix pm = nwa_shares(pn, all_on(p, {1}));
  CHECK(pm.xi[1][1] == Rat(6));
  CHECK(pm.xi[0][1] == pn.context().eps_e(1, Rat(6)));
  CHECK(pm.edge_total(1) == pn.context().hat[1][2]);
}

TEST_CASE("nwa preconditions") {
  CHECK(error_kind([] { Nwa(single_edge(table({0, 1, 4}), {0})); }) == ErrorKind::kNotConcave);
  CHECK(error_kind([] { Nwa(single_edge(table({"0", "0", "0"}), {0})); }) ==
        ErrorKind::kZeroUnitCost);
  CHECK(error_kind([] {
          Nwa(single_edge(CostTable::capacitated_constant(2, Rat(1), 1), {0}));
        }) == ErrorKind::kInfiniteCost);
  CHECK(error_kind([] { make_protocol(ProtocolKind::kNwa, single_edge(table({0, 1, 4}), {0})); }) ==
        ErrorKind::kProtocolInapplicable);
}

TEST_CASE("protocol names round-trip") {
  for (ProtocolKind k : {ProtocolKind::kEqualSplit, ProtocolKind::kIncremental,
                         ProtocolKind::kLeaderBased, ProtocolKind::kStaticShare,
                         ProtocolKind::kSpg, ProtocolKind::kNwa}) {
    CHECK(parse_protocol_name(protocol_name(k)) == k);
  }
  CHECK(error_kind([] { parse_protocol_name("shapley"); }) == ErrorKind::kBadParams);
}

GameInstance random_concave_instance(int i, const char* shape) {
  GenParams params = testing::random_params("random-dag", shape, 5000 + i);
  params.max_vertices = 6;
  params.max_edges = 10;
  params.n_max = 4;
  params.players = 2 + i % 3;
  return generate(params).instance;
}

// psi_e(1) = c_e(1), since a sole user pays psi_e(1); above that
// psi_e(l) = c_e(l) * a / (a + b) for small random a, b.
LeaderShareRule random_rule(const GameInstance& in, std::mt19937_64& rng) {
  LeaderShareRule rule;
  for (const CostTable& c : in.costs) {
    std::vector<Rat> psi{Rat(0), c.at(1)};
    for (long l = 2; l <= in.n_max; ++l) {
      const long a = static_cast<long>(rng() % 4);
      psi.push_back(c.at(l) * Rat(a, a + 1 + static_cast<long>(rng() % 3)));
    }
    rule.psi.push_back(std::move(psi));
  }
  return rule;
}

void check_budget_balance(const GameInstance& in, const StrategyProfile& s,
                          const ShareMatrix& m) {
  const LoadVector loads = load_vector(in.graph, s);
  for (EdgeId e = 0; e < in.graph.num_edges(); ++e) {
    CHECK(m.edge_total(e) == in.costs[static_cast<size_t>(e)].at(loads[static_cast<size_t>(e)]));
    for (size_t i = 0; i < s.paths.size(); ++i) {
      CHECK(m.xi[i][static_cast<size_t>(e)] >= Rat(0));
    }
  }
}

TEST_CASE("budget balance on random instances") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const GameInstance in = random_concave_instance(i, "concave");
    const StrategyProfile s = random_profile(in, rng);
    check_budget_balance(in, s, equal_split_shares(in, s));
    check_budget_balance(in, s, incremental_shares(in, s));
    check_budget_balance(in, s, leader_based_shares(in, s, random_rule(in, rng)));
  }
  for (int i = 0; i < 100; ++i) {
    GenParams params = testing::random_params("random-spg", "strictly-concave", 6000 + i);
    params.n_max = 4;
    params.players = 2 + i % 3;
    const Generated g = generate(params);
    const SpgBuild b = make_spg(g.instance, *g.tree);
    const StrategyProfile s = random_profile(g.instance, rng);
    check_budget_balance(g.instance, s, compute_shares(*b.protocol, s));
  }
}

TEST_CASE("nwa charges exactly the overcharged cost") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const GameInstance in = perturb_for_ties(random_concave_instance(i, "concave-int"), 3);
    const Nwa nwa(in);
    const StrategyProfile s = random_profile(in, rng);
    const ShareMatrix m = nwa_shares(nwa, s);
    const LoadVector loads = load_vector(in.graph, s);
    for (EdgeId e = 0; e < in.graph.num_edges(); ++e) {
      const long l = loads[static_cast<size_t>(e)];
      CHECK(m.edge_total(e) == nwa.charged_cost(e, l));
      if (l > 0) CHECK(nwa.charged_cost(e, l) >= in.costs[static_cast<size_t>(e)].at(l));
    }
  }
}

TEST_CASE("shares do not depend on absent players") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const GameInstance in = perturb_for_ties(random_concave_instance(i, "concave-int"), 3);
    const StrategyProfile s = random_profile(in, rng);
    const size_t drop = rng() % in.players.size();
    std::vector<int> keep;
    StrategyProfile rest;
    for (size_t p = 0; p < in.players.size(); ++p) {
      if (p == drop) continue;
      keep.push_back(static_cast<int>(p));
      rest.paths.push_back(s.paths[p]);
    }
    const GameInstance sub = in.with_players(keep);
    std::vector<bool> avoided(static_cast<size_t>(in.graph.num_edges()), true);
    for (EdgeId e : s.paths[drop]) avoided[static_cast<size_t>(e)] = false;

    const std::vector<ProtocolKind> kinds = {ProtocolKind::kEqualSplit,
                                             ProtocolKind::kIncremental, ProtocolKind::kNwa};
    for (ProtocolKind k : kinds) {
      const ShareMatrix full = compute_shares(*make_protocol(k, in), s);
      const ShareMatrix part = compute_shares(*make_protocol(k, sub), rest);
      for (size_t j = 0; j < keep.size(); ++j) {
        for (EdgeId e = 0; e < in.graph.num_edges(); ++e) {
          if (!avoided[static_cast<size_t>(e)]) continue;
          CHECK(part.xi[j][static_cast<size_t>(e)] ==
                full.xi[static_cast<size_t>(keep[j])][static_cast<size_t>(e)]);
        }
      }
    }
  }
}

TEST_CASE("incremental shares survive monotone relabeling") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const GameInstance in = random_concave_instance(i, "concave");
    GameInstance relabeled = in;
    for (Player& p : relabeled.players) p.id = 3 * p.id + 7;
    const StrategyProfile s = random_profile(in, rng);
    CHECK(incremental_shares(in, s).xi == incremental_shares(relabeled, s).xi);
  }
}

TEST_CASE("spg leader and non-leader share bounds") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    GenParams params = testing::random_params("random-spg", "strictly-concave", 7000 + i);
    params.n_max = 5;
    params.players = 2 + i % 4;
    const Generated g = generate(params);
    const SpgBuild b = make_spg(g.instance, *g.tree);
    const StrategyProfile s = random_profile(g.instance, rng);
    const ShareMatrix m = compute_shares(*b.protocol, s);
    const LoadVector loads = load_vector(g.instance.graph, s);
    for (EdgeId e = 0; e < g.instance.graph.num_edges(); ++e) {
      const long l = loads[static_cast<size_t>(e)];
      if (l < 2 || !b.protocol->opt().contains(l, e)) continue;
      const Rat& psi = b.annotations.psi.edge[static_cast<size_t>(e)];
      const std::optional<int> head = leader(g.instance, s, e);
      for (size_t p = 0; p < s.paths.size(); ++p) {
        const Rat& x = m.xi[p][static_cast<size_t>(e)];
        if (std::find(s.paths[p].begin(), s.paths[p].end(), e) == s.paths[p].end()) continue;
        if (g.instance.players[p].id == *head) {
          CHECK(x >= psi);
        } else {
          CHECK(x < psi);
        }
      }
    }
  }
}

}  // namespace
}  // namespace netshare
