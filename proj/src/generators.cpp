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

#include "netshare/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "json.hpp"
#include "netshare/error.hpp"

namespace netshare {

namespace {

using Json = nlohmann::ordered_json;

// mt19937_64 is specified bit-exactly; the standard distributions are not,
// so draws go through this helper to keep instances identical across
// platforms.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }
  bool coin() { return (rng_() & 1) != 0; }

 private:
  std::mt19937_64 rng_;
};

struct Builder {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<CostTable> costs;

  EdgeId add(VertexId tail, VertexId head, CostTable cost) {
    const EdgeId id = static_cast<EdgeId>(edges.size());
    edges.push_back({id, tail, head});
    costs.push_back(std::move(cost));
    return id;
  }

  GameInstance finish(long n_max, std::vector<Player> players, VertexId s, VertexId t) {
    GameInstance in;
    in.graph = Graph(vertices, std::move(edges));
    in.graph.source = s;
    in.graph.sink = t;
    in.costs = std::move(costs);
    in.players = std::move(players);
    in.n_max = n_max;
    in.validate();
    return in;
  }
};

std::vector<Player> symmetric_players(long count, VertexId s, VertexId t) {
  std::vector<Player> out;
  for (long i = 0; i < count; ++i) out.push_back({static_cast<int>(i), s, t});
  return out;
}

mpz_class pow10_z(long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return z;
}

CostTable random_cost(const std::string& shape, long n_max, Draw& draw) {
  std::vector<CostTable::Run> runs;
  auto push = [&](long m) { runs.push_back({1, Rat(m)}); };
  if (shape == "concave" || shape == "concave-int") {
    long m = draw.uniform(shape == "concave" ? 1 : 2, 9);
    for (long l = 1; l <= n_max; ++l) {
      push(m);
      m = draw.uniform(0, m);
    }
  } else if (shape == "strictly-concave") {
    // n_max distinct marginals, largest first.
    std::vector<long> pool;
    for (long v = 1; v <= 4 * n_max + 8; ++v) pool.push_back(v);
    std::vector<long> pick;
    for (long l = 0; l < n_max; ++l) {
      const long at = draw.uniform(0, static_cast<long>(pool.size()) - 1);
      pick.push_back(pool[static_cast<size_t>(at)]);
      pool.erase(pool.begin() + at);
    }
    std::sort(pick.rbegin(), pick.rend());
    for (long m : pick) push(m);
  } else if (shape == "convex") {
    long m = draw.uniform(0, 4);
    for (long l = 1; l <= n_max; ++l) {
      push(m);
      m = draw.uniform(m, m + 3);
    }
  } else if (shape == "constant") {
    push(draw.uniform(1, 9));
    runs.push_back({n_max - 1, Rat(0)});
  } else {
    throw Error(ErrorKind::kBadParams, "unknown cost shape '" + shape + "'");
  }
  CostTable c = CostTable::from_runs(n_max, std::move(runs));
  const CostShape f = classify(c);
  const bool ok = (shape == "strictly-concave" && (f.strictly_concave || n_max == 1)) ||
                  (shape == "convex" && f.convex) || (shape == "constant" && f.constant) ||
                  ((shape == "concave" || shape == "concave-int") && f.concave);
  if (!ok) throw Error(ErrorKind::kArithmetic, "generated table fails its shape check");
  return c;
}

std::vector<Player> random_players(const GenParams& p, long count, VertexId s, VertexId t,
                                   const Graph& g, Draw& draw) {
  if (!p.multicast) return symmetric_players(count, s, t);
  std::vector<VertexId> sources;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != t && reachable_from(g, v)[static_cast<size_t>(t)]) sources.push_back(v);
  }
  std::vector<Player> out;
  for (long i = 0; i < count; ++i) {
    const auto at = static_cast<size_t>(draw.uniform(0, static_cast<long>(sources.size()) - 1));
    out.push_back({static_cast<int>(i), sources[at], t});
  }
  return out;
}

std::uint64_t space_size(const GameInstance& in, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const Player& p : in.players) {
    std::vector<Path> paths;
    try {
      paths = enumerate_paths(in.graph, p.source, p.sink, cap);
    } catch (const Error&) {
      return cap + 1;
    }
    if (paths.empty()) return 0;
    if (total > cap / paths.size() + 1) return cap + 1;
    total *= paths.size();
  }
  return total;
}

Generated random_dag(const GenParams& p, Draw& draw) {
  const long n_max = p.n_max > 0 ? p.n_max : 4;
  const long count = p.players > 0 ? p.players : n_max;
  const int max_v = std::max(2, p.max_vertices);
  int v_count = static_cast<int>(draw.uniform(2, max_v));
  while (v_count > 2 && 2 * (v_count - 2) > p.max_edges) --v_count;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (v_count == 2) pairs.push_back({0, 1});
  for (VertexId v = 1; v + 1 < v_count; ++v) {
    pairs.push_back({static_cast<VertexId>(draw.uniform(0, v - 1)), v});
    pairs.push_back({v, static_cast<VertexId>(draw.uniform(v + 1, v_count - 1))});
  }
  const long target = draw.uniform(static_cast<long>(pairs.size()),
                                   std::max<long>(p.max_edges, static_cast<long>(pairs.size())));
  while (static_cast<long>(pairs.size()) < target) {
    const auto a = static_cast<VertexId>(draw.uniform(0, v_count - 2));
    const auto b = static_cast<VertexId>(draw.uniform(a + 1, v_count - 1));
    pairs.push_back({a, b});
  }
  Builder b;
  b.vertices = v_count;
  for (auto [u, v] : pairs) b.add(u, v, random_cost(p.shape, n_max, draw));
  const VertexId t = v_count - 1;
  Graph probe(v_count, b.edges);
  auto players = random_players(p, count, 0, t, probe, draw);
  Generated out;
  out.instance = b.finish(n_max, std::move(players), 0, t);
  return out;
}

Generated random_spg(const GenParams& p, Draw& draw) {
  const long n_max = p.n_max > 0 ? p.n_max : 4;
  const long count = p.players > 0 ? p.players : n_max;
  const long leaves = draw.uniform(std::min(2, p.max_edges), std::max(1, p.max_edges));
  Builder b;
  b.vertices = 2;
  // Recursive composition with the tree description built alongside.
  auto build = [&](auto&& self, long n, VertexId s, VertexId t) -> Json {
    if (n == 1) {
      const EdgeId e = b.add(s, t, random_cost(p.shape, n_max, draw));
      return Json{{"edge", e}};
    }
    const long left = draw.uniform(1, n - 1);
    if (draw.coin()) {
      const VertexId mid = b.vertices++;
      Json l = self(self, left, s, mid);
      Json r = self(self, n - left, mid, t);
      return Json::array({"S", std::move(l), std::move(r)});
    }
    Json l = self(self, left, s, t);
    Json r = self(self, n - left, s, t);
    return Json::array({"P", std::move(l), std::move(r)});
  };
  Json desc = build(build, leaves, 0, 1);
  Graph probe(b.vertices, b.edges);
  auto players = random_players(p, count, 0, 1, probe, draw);
  Generated out;
  out.instance = b.finish(n_max, std::move(players), 0, 1);
  out.tree = parse_sp_tree(out.instance.graph, desc);
  return out;
}

void stamp(GameInstance& in, const std::string& family) { in.metadata["family"] = family; }

}  // namespace

Rat sqrt_approx(long n, int digits) {
  if (n < 0) throw Error(ErrorKind::kBadParams, "square root of a negative number");
  mpz_class root;
  mpz_class nz(n);
  mpz_sqrt(root.get_mpz_t(), nz.get_mpz_t());
  if (root * root == nz) return Rat(root);
  const long scale = digits + 1;
  mpz_class big = nz * pow10_z(2 * scale);
  mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
  return Rat(mpq_class(root, pow10_z(scale)));
}

GameInstance gen_multicast_const_lb(long n, const Rat& c) {
  if (n < 1) throw Error(ErrorKind::kBadParams, "multicast-const-lb needs n >= 1");
  if (c.sign() <= 0 || c.is_inf()) {
    throw Error(ErrorKind::kBadParams, "multicast-const-lb needs a finite c > 0");
  }
  Builder b;
  b.vertices = static_cast<int>(n) + 2;
  const VertexId v = static_cast<VertexId>(n);
  const VertexId t = v + 1;
  std::vector<Player> players;
  for (long i = 0; i < n; ++i) {
    const auto s = static_cast<VertexId>(i);
    b.add(s, t, CostTable::constant(n, Rat(1)));
    b.add(s, v, CostTable::constant(n, Rat(0)));
    players.push_back({static_cast<int>(i), s, t});
  }
  b.add(v, t, CostTable::constant(n, c));
  GameInstance in = b.finish(n, std::move(players), 0, t);
  in.graph.source.reset();
  stamp(in, "multicast-const-lb");
  in.metadata["c"] = c.str();
  return in;
}

GameInstance gen_dag_convex_lb(long n, long players) {
  if (n < 2) throw Error(ErrorKind::kBadParams, "dag-convex-lb needs n >= 2");
  if (players <= 0) players = n + 1;
  if (players > n + 1) throw Error(ErrorKind::kBadParams, "dag-convex-lb has at most n+1 players");
  const long n_max = n + 1;
  auto cap = [&](long v) { return CostTable::capacitated_constant(n_max, Rat(v), 1); };
  Builder b;
  b.vertices = static_cast<int>(2 * n + 2);
  const VertexId s = 0;
  const VertexId t = static_cast<VertexId>(2 * n + 1);
  auto vv = [](long i) { return static_cast<VertexId>(i); };
  auto uu = [n](long i) { return static_cast<VertexId>(n + i); };
  b.add(s, t, cap(1));
  for (long i = 1; i <= n; ++i) {
    b.add(s, vv(i), cap(0));
    b.add(vv(i), uu(i), cap(1));
    b.add(uu(i), t, cap(0));
    if (i >= 2) b.add(vv(i), uu(i - 1), cap(0));
  }
  GameInstance in = b.finish(n_max, symmetric_players(players, s, t), s, t);
  stamp(in, "dag-convex-lb");
  return in;
}

GameInstance gen_overcharge_lb(int digits, long players) {
  if (digits < 6) throw Error(ErrorKind::kBadParams, "overcharge-lb needs digits >= 6");
  if (players < 1 || players > 3) throw Error(ErrorKind::kBadParams, "overcharge-lb has 1..3 players");
  const Rat q = (sqrt_approx(33, digits + 1) - Rat(1)) / Rat(8);
  const long n_max = 3;
  auto cap = [&](const Rat& v) { return CostTable::capacitated_constant(n_max, v, 1); };
  Builder b;
  b.vertices = 4;
  b.add(0, 3, cap(Rat(1)));
  b.add(0, 2, cap(q));
  b.add(0, 1, cap(Rat(0)));
  b.add(1, 2, cap(Rat(0)));
  b.add(1, 3, cap(q));
  b.add(2, 3, cap(Rat(0)));
  GameInstance in = b.finish(n_max, symmetric_players(players, 0, 3), 0, 3);
  stamp(in, "overcharge-lb");
  in.metadata["q"] = q.str();
  in.metadata["digits"] = std::to_string(digits);
  return in;
}

Rat overcharge_q(const GameInstance& instance) {
  auto it = instance.metadata.find("q");
  if (it == instance.metadata.end()) throw Error(ErrorKind::kBadParams, "instance has no q record");
  return Rat::parse(it->second);
}

Rat static_share_cost(long k, long j, long load) {
  return Rat(load, j * k * k) + harmonic(j - 1) / Rat(k) + Rat(j) * Rat::pow10(-(2 * k + 4));
}

long static_share_lstar(long k) {
  const long r = 1L << k;
  // c_r(l) > k  <=>  l > r k^2 (k - H_{r-1}/k - eps_r).
  const Rat bound = Rat(r * k * k) * (Rat(k) - harmonic(r - 1) / Rat(k) -
                                      Rat(r) * Rat::pow10(-(2 * k + 4)));
  mpz_class l = bound.ceil();
  if (Rat(l) == bound) l += 1;
  return l.get_si();
}

GameInstance gen_static_share_lb(long k, long players) {
  if (k < 6) throw Error(ErrorKind::kKTooSmall, "static-share-lb needs k >= 6");
  if (k > 10) throw Error(ErrorKind::kBadParams, "static-share-lb supports k <= 10");
  const long r = 1L << k;
  const long n_max = r * r * k * k;
  if (players < 1 || players > n_max) throw Error(ErrorKind::kBadParams, "bad player count");
  Builder b;
  b.vertices = 4;
  b.add(0, 1, CostTable::from_runs(n_max, {{k, Rat(1)}, {n_max - k, Rat(0)}}));
  b.add(1, 2, CostTable::constant(n_max, Rat(0)));
  b.add(2, 3, CostTable::constant(n_max, Rat(2 * k)));
  b.add(1, 3, CostTable::from_runs(n_max, {{n_max, Rat(1)}}));
  for (long j = 1; j <= r; ++j) {
    const Rat slope(1, j * k * k);
    b.add(0, 2, CostTable::from_runs(n_max, {{1, static_share_cost(k, j, 1)},
                                             {n_max - 1, slope}}));
  }
  GameInstance in = b.finish(n_max, symmetric_players(players, 0, 3), 0, 3);
  stamp(in, "static-share-lb");
  in.metadata["k"] = std::to_string(k);
  return in;
}

GameInstance gen_multicast_convex_lb(long n, int digits) {
  if (n < 4) throw Error(ErrorKind::kBadParams, "multicast-convex-lb needs n >= 4");
  const long n_max = n + 1;
  const Rat root = sqrt_approx(n, digits);
  auto cap = [&](const Rat& v) { return CostTable::capacitated_constant(n_max, v, 1); };
  const VertexId s1 = 0;
  const VertexId s2 = 1;
  auto vv = [](long i) { return static_cast<VertexId>(1 + i); };
  auto uu = [n](long i) { return static_cast<VertexId>(n + 1 + i); };
  const auto t = static_cast<VertexId>(2 * n + 2);
  Builder b;
  b.vertices = static_cast<int>(2 * n + 3);
  for (long i = 1; i < n; ++i) b.add(s1, vv(i), cap(Rat(0)));
  b.add(s2, vv(n), cap(Rat(0)));
  for (long i = 1; i <= n; ++i) {
    b.add(vv(i), uu(i), cap(Rat(1)));
    if (i < n) b.add(vv(i), uu(i + 1), cap(Rat(0)));
    b.add(uu(i), t, cap(Rat(0)));
  }
  b.add(s2, t, cap(root));
  std::vector<Player> players;
  for (long i = 0; i + 1 < n; ++i) players.push_back({static_cast<int>(i), s1, t});
  players.push_back({static_cast<int>(n - 1), s2, t});
  players.push_back({static_cast<int>(n), s2, t});
  GameInstance in = b.finish(n_max, std::move(players), s1, t);
  in.graph.source.reset();
  stamp(in, "multicast-convex-lb");
  in.metadata["sqrt_n"] = root.str();
  return in;
}

std::vector<std::string> family_names() {
  return {"multicast-const-lb", "dag-convex-lb",       "overcharge-lb", "static-share-lb",
          "multicast-convex-lb", "random-dag", "random-spg"};
}

Generated generate(const GenParams& p) {
  Generated out;
  if (p.family == "multicast-const-lb") {
    out.instance = gen_multicast_const_lb(p.n, p.c);
  } else if (p.family == "dag-convex-lb") {
    out.instance = gen_dag_convex_lb(p.n, p.players);
  } else if (p.family == "overcharge-lb") {
    out.instance = gen_overcharge_lb(p.digits, p.players > 0 ? p.players : 3);
  } else if (p.family == "static-share-lb") {
    out.instance = gen_static_share_lb(p.k, p.players > 0 ? p.players : 1);
  } else if (p.family == "multicast-convex-lb") {
    out.instance = gen_multicast_convex_lb(p.n, p.digits);
  } else if (p.family == "random-dag" || p.family == "random-spg") {
    Draw draw(p.seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      out = p.family == "random-dag" ? random_dag(p, draw) : random_spg(p, draw);
      if (p.max_profiles == 0 || space_size(out.instance, p.max_profiles) <= p.max_profiles) {
        stamp(out.instance, p.family);
        out.instance.metadata["seed"] = std::to_string(p.seed);
        out.instance.metadata["shape"] = p.shape;
        return out;
      }
    }
    throw Error(ErrorKind::kBadParams, "no instance within the profile cap after 1000 draws");
  } else {
    throw Error(ErrorKind::kBadParams, "unknown family '" + p.family + "'");
  }
  return out;
}

}  // namespace netshare
