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

#include "netshare/verify.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "netshare/error.hpp"
#include "netshare/generators.hpp"
#include "netshare/protocols.hpp"

namespace netshare {

namespace {

constexpr int kNwaInstances = 200;
constexpr int kSpgInstances = 100;
constexpr int kConvexInstances = 100;
constexpr int kConcaveInstances = 100;
constexpr int kDagInstances = 100;
constexpr int kShareProfiles = 1000;
constexpr long kNwaRound = 3;

// Collects the first failure of a check.
class Tally {
 public:
  void fail(const std::string& what) {
    if (ok_) first_ = what;
    ok_ = false;
    ++failures_;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  bool ok() const { return ok_; }
  CheckResult result(int criterion, std::string name, const std::string& summary) const {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.pass = ok_;
    r.detail = ok_ ? summary : first_ + " (" + std::to_string(failures_) + " failures)";
    return r;
  }

 private:
  bool ok_ = true;
  long failures_ = 0;
  std::string first_;
};

std::string where(const char* family, int index) {
  return std::string(family) + " #" + std::to_string(index) + ": ";
}

Path find_path(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& hops) {
  Path p;
  for (auto [a, b] : hops) {
    for (EdgeId e : g.out_edges(a)) {
      if (g.edge(e).head == b) {
        p.push_back(e);
        break;
      }
    }
  }
  return p;
}

Rat path_cost(const GameInstance& in, const Path& p, long load) {
  Rat sum(0);
  for (EdgeId e : p) sum += in.costs[static_cast<size_t>(e)].at(load);
  return sum;
}

// Every edge total at every load equals the charged cost.
bool table_balanced(const Protocol& protocol, std::string* why) {
  const GameInstance& in = protocol.instance();
  for (EdgeId e = 0; e < in.graph.num_edges(); ++e) {
    for (long l = 1; l <= protocol.max_load(); ++l) {
      Rat sum(0);
      for (long r = 0; r < l; ++r) sum += protocol.share(e, l, r);
      if (sum != protocol.charged_cost(e, l)) {
        *why = "edge " + std::to_string(e) + " load " + std::to_string(l) + " collects " +
               sum.str() + " for cost " + protocol.charged_cost(e, l).str();
        return false;
      }
    }
  }
  return true;
}

bool profile_balanced(const Protocol& protocol, const StrategyProfile& s) {
  const ShareMatrix xi = compute_shares(protocol, s);
  const LoadVector loads = load_vector(protocol.instance().graph, s);
  for (size_t e = 0; e < loads.size(); ++e) {
    const Rat want = loads[e] == 0 ? Rat(0) : protocol.charged_cost(static_cast<EdgeId>(e), loads[e]);
    if (xi.edge_total(static_cast<EdgeId>(e)) != want) return false;
  }
  return true;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t z = seed ^ (tag * 0x9e3779b97f4a7c15ULL) ^ (index + 1) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

StrategyProfile all_on(const GameInstance& instance, const Path& path) {
  return StrategyProfile{std::vector<Path>(instance.players.size(), path)};
}

GenParams nwa_family(std::uint64_t seed, int index) {
  GenParams p;
  p.family = "random-dag";
  p.seed = derive_seed(seed, 1, static_cast<std::uint64_t>(index));
  p.shape = "concave-int";
  p.max_vertices = 6;
  p.max_edges = 10;
  p.n_max = 4;
  p.players = 1 + index % 4;
  p.max_profiles = 0;
  return p;
}

GenParams spg_family(std::uint64_t seed, int index) {
  GenParams p;
  p.family = "random-spg";
  p.seed = derive_seed(seed, 2, static_cast<std::uint64_t>(index));
  p.shape = "strictly-concave";
  p.max_edges = 12;
  p.n_max = 5;
  p.players = 2 + index % 4;
  p.max_profiles = 1'000'000;
  return p;
}

GenParams convex_spg_family(std::uint64_t seed, int index) {
  GenParams p;
  p.family = "random-spg";
  p.seed = derive_seed(seed, 3, static_cast<std::uint64_t>(index));
  p.shape = "convex";
  p.max_edges = 12;
  p.n_max = 4;
  p.players = 1 + index % 4;
  p.max_profiles = 1'000'000;
  return p;
}

GenParams concave_family(std::uint64_t seed, int index) {
  GenParams p;
  p.family = "random-dag";
  p.seed = derive_seed(seed, 4, static_cast<std::uint64_t>(index));
  p.shape = "concave";
  p.max_vertices = 6;
  p.max_edges = 8;
  p.n_max = 4;
  p.players = 1 + index % 4;
  p.max_profiles = 1'000'000;
  return p;
}

std::vector<CheckResult> verify_nwa_bound(std::uint64_t seed, const EnumerationOptions& options) {
  Tally main;
  long ties = 0;
  long equilibria = 0;
  long profiles = 0;
  for (int i = 0; i < kNwaInstances; ++i) {
    const std::string at = where("nwa", i);
    try {
      const GameInstance original = generate(nwa_family(seed, i)).instance;
      const GameInstance perturbed = perturb_for_ties(original, kNwaRound);
      const Nwa nwa(perturbed);
      const AnalysisReport rep = poa_report(nwa, options, &original);
      ties += rep.tie_detector_hits;
      equilibria += static_cast<long>(rep.pne.size());
      profiles += static_cast<long>(rep.profiles_scanned);
      if (rep.pne.empty()) {
        main.fail(at + "no equilibrium");
        continue;
      }
      const long n = static_cast<long>(original.players.size());
      const StrategyProfile target = all_on(perturbed, nwa.context().opt.at(n));
      for (const StrategyProfile& s : rep.pne) {
        main.expect(s == target, at + "equilibrium off OPT(n)");
      }
      const Rat bound = n >= 2 ? Rat(1) + rep.eps->eps1 + rep.eps->eps2 : Rat(2) + rep.eps->eps1;
      main.expect(*rep.poa <= bound, at + "ratio " + rep.poa->str() + " above " + bound.str());
    } catch (const Error& e) {
      main.fail(at + e.what());
    }
  }
  std::ostringstream summary;
  summary << kNwaInstances << " instances, " << equilibria << " equilibria, " << profiles
          << " profiles scanned";
  Tally tie;
  tie.expect(ties == 0, std::to_string(ties) + " exact ties between compared totals");
  return {main.result(1, "NWA PoA <= 1 + eps1 + eps2", summary.str()),
          tie.result(11, "No-tie certification", "0 tie-detector hits over " +
                                                     std::to_string(kNwaInstances) + " runs")};
}

CheckResult verify_spg_poa(std::uint64_t seed, const EnumerationOptions& options) {
  Tally t;
  long equilibria = 0;
  for (int i = 0; i < kSpgInstances; ++i) {
    const std::string at = where("spg", i);
    try {
      const Generated g = generate(spg_family(seed, i));
      const SpgBuild spg = make_spg(g.instance, *g.tree);
      const StaticShare& proto = *spg.protocol;
      std::string why;
      t.expect(table_balanced(proto, &why), at + "budget balance: " + why);
      const PneResult pne = enumerate_pne(proto, options);
      const OptimumResult opt = brute_force_optimum(g.instance, options);
      equilibria += static_cast<long>(pne.pne.size());
      t.expect(!pne.pne.empty(), at + "no equilibrium");
      for (const StrategyProfile& s : pne.pne) {
        const Rat c = profile_cost(s, g.instance.graph, g.instance.costs);
        t.expect(c == opt.cost, at + "equilibrium cost " + c.str() + " vs opt " + opt.cost.str());
        t.expect(profile_balanced(proto, s), at + "equilibrium not budget balanced");
      }
      const long n = static_cast<long>(g.instance.players.size());
      const StrategyProfile target = all_on(g.instance, proto.opt().at(n));
      t.expect(is_nash(proto, target, options.max_paths).is_nash, at + "all-on-OPT(n) not stable");
      t.expect(profile_balanced(proto, target), at + "OPT profile not budget balanced");
    } catch (const Error& e) {
      t.fail(at + e.what());
    }
  }
  return t.result(2, "SPG PoA = 1",
                  std::to_string(kSpgInstances) + " SPGs, " + std::to_string(equilibria) +
                      " equilibria all optimal, budget balance exact");
}

CheckResult verify_psi_invariants(std::uint64_t seed, const EnumerationOptions& options) {
  Tally t;
  long checked_profiles = 0;
  long both_cases = 0;
  for (int i = 0; i < kSpgInstances; ++i) {
    const std::string at = where("spg", i);
    try {
      const Generated g = generate(spg_family(seed, i));
      const SpgBuild spg = make_spg(g.instance, *g.tree);
      const SPTree& tree = *g.tree;
      const SPAnnotations& a = spg.annotations;
      both_cases += a.psi.both_cases;
      t.expect(a.strict_leaves, at + "leaves not strictly concave");
      const long n_max = g.instance.n_max;
      for (int c = 0; c < tree.size(); ++c) {
        const auto& node = tree.node(c);
        const Rat& psi = a.psi.node[static_cast<size_t>(c)];
        const auto& phi = a.phi[static_cast<size_t>(c)];
        const std::string tag = at + "node " + std::to_string(c) + ": ";
        t.expect(psi <= phi[1], tag + "psi above phi(1)");
        const auto& ls = a.lstar[static_cast<size_t>(c)];
        if (ls) {
          for (long l = std::max(*ls, 2L); l <= n_max; ++l) {
            t.expect(psi > phi[static_cast<size_t>(l)] / Rat(l),
                     tag + "psi not above phi(" + std::to_string(l) + ")/l");
          }
          if (*ls == 1) t.expect(psi == phi[1], tag + "lstar = 1 but psi != phi(1)");
        }
        if (node.kind == SPTree::Kind::kSeries) {
          t.expect(a.psi.node[static_cast<size_t>(node.left)] +
                           a.psi.node[static_cast<size_t>(node.right)] ==
                       psi,
                   tag + "series psi does not add up");
        } else if (node.kind == SPTree::Kind::kParallel) {
          t.expect(a.psi.node[static_cast<size_t>(node.left)] == psi &&
                       a.psi.node[static_cast<size_t>(node.right)] == psi,
                   tag + "parallel psi differs");
        }
      }
      // Leader and non-leader shares on OPT edges over random profiles.
      const StrategySpace space = strategy_space(g.instance, options.max_paths);
      const StaticShare& proto = *spg.protocol;
      std::uint64_t state = derive_seed(seed, 5, static_cast<std::uint64_t>(i));
      const int per = kShareProfiles / kSpgInstances;
      for (int k = 0; k < per; ++k) {
        StrategyProfile s;
        for (const auto& options_i : space.paths) {
          state = derive_seed(state, 6, 0);
          s.paths.push_back(options_i[state % options_i.size()]);
        }
        const ShareMatrix xi = compute_shares(proto, s);
        const LoadVector loads = load_vector(g.instance.graph, s);
        for (EdgeId e = 0; e < g.instance.graph.num_edges(); ++e) {
          const long l = loads[static_cast<size_t>(e)];
          if (l < 2 || !proto.opt().contains(l, e)) continue;
          const Rat& pe = a.psi.edge[static_cast<size_t>(e)];
          const auto lead = leader(g.instance, s, e);
          for (size_t p = 0; p < s.paths.size(); ++p) {
            if (std::find(s.paths[p].begin(), s.paths[p].end(), e) == s.paths[p].end()) continue;
            const Rat& x = xi.xi[p][static_cast<size_t>(e)];
            if (g.instance.players[p].id == *lead) {
              t.expect(x >= pe, at + "leader share below psi_e");
            } else {
              t.expect(x < pe, at + "non-leader share not below psi_e");
            }
          }
        }
        ++checked_profiles;
      }
    } catch (const Error& e) {
      t.fail(at + e.what());
    }
  }
  return t.result(3, "psi invariants",
                  std::to_string(kSpgInstances) + " SPGs, " + std::to_string(checked_profiles) +
                      " share profiles, " + std::to_string(both_cases) +
                      " nodes with both series cases");
}

CheckResult verify_incremental_poa(std::uint64_t seed, const EnumerationOptions& options) {
  Tally t;
  long equilibria = 0;
  for (int i = 0; i < kConvexInstances; ++i) {
    const std::string at = where("convex", i);
    try {
      const Generated g = generate(convex_spg_family(seed, i));
      const Incremental proto(g.instance);
      const PneResult pne = enumerate_pne(proto, options);
      const OptimumResult opt = brute_force_optimum(g.instance, options);
      equilibria += static_cast<long>(pne.pne.size());
      t.expect(!pne.pne.empty(), at + "no equilibrium");
      for (const StrategyProfile& s : pne.pne) {
        const Rat c = profile_cost(s, g.instance.graph, g.instance.costs);
        t.expect(c == opt.cost, at + "equilibrium cost " + c.str() + " vs opt " + opt.cost.str());
      }
    } catch (const Error& e) {
      t.fail(at + e.what());
    }
  }
  return t.result(4, "Incremental PoA = 1 on convex SPGs",
                  std::to_string(kConvexInstances) + " SPGs, " + std::to_string(equilibria) +
                      " equilibria all optimal");
}

CheckResult verify_multicast_facts(const EnumerationOptions& options) {
  Tally t;
  std::string poa_text;
  try {
    const GameInstance in = gen_multicast_const_lb(5, Rat(1));
    const EqualSplit proto(in);
    StrategyProfile direct;
    for (long i = 0; i < 5; ++i) direct.paths.push_back({static_cast<EdgeId>(2 * i)});
    t.expect(is_nash(proto, direct).is_nash, "n=5: all-direct profile is not an equilibrium");
    t.expect(profile_cost(direct, in.graph, in.costs) == Rat(5), "n=5: all-direct cost != 5");
    const AnalysisReport rep = poa_report(proto, options);
    t.expect(rep.opt_cost == Rat(1), "n=5: opt != 1");
    t.expect(rep.poa && *rep.poa == Rat(5), "n=5: poa != 5");
    if (rep.poa) poa_text = rep.poa->str();

    const GameInstance big = gen_multicast_const_lb(25, sqrt_approx(25, 12));
    const EqualSplit proto25(big);
    StrategyProfile direct25;
    for (long i = 0; i < 25; ++i) direct25.paths.push_back({static_cast<EdgeId>(2 * i)});
    t.expect(is_nash(proto25, direct25).is_nash, "n=25: all-direct profile is not an equilibrium");
    const ShareMatrix xi = compute_shares(proto25, direct25);
    const Rat limit = Rat(5) + Rat::pow10(-9);
    for (size_t p = 0; p < 25; ++p) {
      t.expect(xi.player_total(p) <= limit, "n=25: a player pays more than 5 + 1e-9");
    }
  } catch (const Error& e) {
    t.fail(e.what());
  }
  return t.result(5, "Multicast concave facts", "poa " + poa_text + "; n=25 direct profile stable");
}

CheckResult verify_dag_convex_facts(const EnumerationOptions& options) {
  Tally t;
  try {
    const long n = 4;
    const GameInstance five = gen_dag_convex_lb(n, 5);
    const GameInstance four = gen_dag_convex_lb(n, 4);
    const Rat opt5 = brute_force_optimum(five, options).cost;
    const Rat opt4 = brute_force_optimum(four, options).cost;
    t.expect(opt5 == Rat(5), "5-player optimum " + opt5.str() + " != 5");
    t.expect(opt4 == Rat(1), "4-player optimum " + opt4.str() + " != 1");
    const VertexId s = 0;
    const auto tt = static_cast<VertexId>(2 * n + 1);
    StrategyProfile straight;
    for (long i = 1; i <= n; ++i) {
      const auto v = static_cast<VertexId>(i);
      const auto u = static_cast<VertexId>(n + i);
      straight.paths.push_back(find_path(four.graph, {{s, v}, {v, u}, {u, tt}}));
    }
    check_profile(four, straight);
    const Rat c = profile_cost(straight, four.graph, four.costs);
    t.expect(c == Rat(4), "straight profile cost " + c.str() + " != 4");
  } catch (const Error& e) {
    t.fail(e.what());
  }
  return t.result(6, "Convex DAG facts", "optima 5 and 1, straight profile 4");
}

CheckResult verify_overcharge_facts(const EnumerationOptions& options) {
  Tally t;
  std::string summary;
  try {
    const GameInstance three = gen_overcharge_lb(12, 3);
    const GameInstance two = gen_overcharge_lb(12, 2);
    const Rat q = overcharge_q(three);
    const Rat opt3 = brute_force_optimum(three, options).cost;
    const Rat opt2 = brute_force_optimum(two, options).cost;
    t.expect(opt3 == Rat(2) * q + Rat(1), "3-player optimum " + opt3.str() + " != 2q+1");
    t.expect(opt2 == Rat(1), "2-player optimum " + opt2.str() + " != 1");
    const Rat gap = (q + Rat(2)) / (Rat(2) * q + Rat(1)) - Rat(2) * q;
    const Rat mag = gap.sign() < 0 ? -gap : gap;
    t.expect(mag <= Rat::pow10(-9), "(q+2)/(2q+1) - 2q = " + gap.decimal(15));
    summary = "q = " + q.decimal(12) + ", |(q+2)/(2q+1) - 2q| = " + mag.decimal(15);
  } catch (const Error& e) {
    t.fail(e.what());
  }
  return t.result(7, "Overcharging bound arithmetic", summary);
}

CheckResult verify_static_share_facts() {
  Tally t;
  const long k = 6;
  const long r = 1L << k;
  const long top = 4000;
  long lstar = 0;
  try {
    const GameInstance in = gen_static_share_lb(k, 1);
    auto c = [&](long j, long l) { return in.costs[static_cast<size_t>(3 + j)].at(l); };
    auto c0 = [&](long l) { return in.costs[0].at(l); };
    for (long l = k + 1; l <= top; ++l) {
      t.expect(c0(l) + Rat(l) > c(1, l) + Rat(2 * k),
               "c_0 + l > c_1 + 2k fails at l = " + std::to_string(l));
    }
    for (long j = 1; j < r; ++j) {
      for (long l = 1; l <= std::min(top, (j + 1) * k); ++l) {
        t.expect(c(j, l) < c(j + 1, l), "c_j < c_{j+1} fails at j = " + std::to_string(j) +
                                            ", l = " + std::to_string(l));
      }
    }
    // j = 1 would compare against c_0, which sits on (s, v); see the notes.
    for (long j = 2; j <= r; ++j) {
      for (long l = j * k + 1; l <= top; ++l) {
        t.expect(c(j - 1, l) > c(j, l), "c_{j-1} > c_j fails at j = " + std::to_string(j) +
                                            ", l = " + std::to_string(l));
      }
    }
    lstar = static_share_lstar(k);
    t.expect(c(r, lstar) > Rat(k) && c(r, lstar - 1) <= Rat(k), "lstar is not the first crossing");
    t.expect(lstar > r * k + 1 && lstar <= r * r * k * k, "lstar outside (rk+1, r^2k^2]");
    const long upto = lstar + 2 * k;
    const OptTable opt = opt_path_table(in, upto);
    const Path svt{0, 3};
    const Path svut{0, 1, 2};
    for (long l = 1; l <= upto; ++l) {
      Path want;
      if (l <= k) {
        want = svt;
      } else if (l >= lstar) {
        want = svut;
      } else {
        const long j = std::min(r, (l - 1) / k);
        want = {static_cast<EdgeId>(3 + j), 2};
      }
      t.expect(opt.at(l) == want, "OPT(" + std::to_string(l) + ") differs from the table");
    }
  } catch (const Error& e) {
    t.fail(e.what());
  }
  return t.result(8, "Static-share instance structure",
                  "inequalities for j <= 64, l <= 4000; OPT regimes up to lstar = " +
                      std::to_string(lstar));
}

CheckResult verify_single_path_optimum(std::uint64_t seed, const EnumerationOptions& options) {
  Tally t;
  for (int i = 0; i < kConcaveInstances; ++i) {
    const std::string at = where("concave", i);
    try {
      const GameInstance in = generate(concave_family(seed, i)).instance;
      const long n = static_cast<long>(in.players.size());
      const OptTable opt = opt_path_table(in, n);
      const Rat single = path_cost(in, opt.at(n), n);
      const Rat brute = brute_force_optimum(in, options).cost;
      t.expect(single == brute, at + "single path " + single.str() + " vs optimum " + brute.str());
    } catch (const Error& e) {
      t.fail(at + e.what());
    }
  }
  return t.result(9, "Single-path concave optimum",
                  std::to_string(kConcaveInstances) + " instances exact");
}

CheckResult verify_weight_paths(std::uint64_t seed) {
  Tally t;
  long paths = 0;
  for (int i = 0; i < kDagInstances; ++i) {
    const std::string at = where("dag", i);
    try {
      GenParams p;
      p.family = "random-dag";
      p.seed = derive_seed(seed, 7, static_cast<std::uint64_t>(i));
      p.shape = "constant";
      p.max_vertices = 10;
      p.max_edges = 20;
      p.n_max = 1;
      const GameInstance in = generate(p).instance;
      const WeightAssignment w = assign_weights(in.graph);
      for (const Edge& e : in.graph.edges()) {
        const long we = w.w[static_cast<size_t>(e.id)];
        t.expect(we > 0 && we == w.omega[static_cast<size_t>(e.head)] -
                                     w.omega[static_cast<size_t>(e.tail)],
                 at + "edge weight mismatch");
      }
      for (VertexId u = 0; u < in.graph.num_vertices(); ++u) {
        for (VertexId v = 0; v < in.graph.num_vertices(); ++v) {
          if (u == v) continue;
          for (const Path& path : enumerate_paths(in.graph, u, v)) {
            long sum = 0;
            for (EdgeId e : path) sum += w.w[static_cast<size_t>(e)];
            t.expect(sum == w.omega[static_cast<size_t>(v)] - w.omega[static_cast<size_t>(u)],
                     at + "path weight differs from the potential gap");
            ++paths;
          }
        }
      }
    } catch (const Error& e) {
      t.fail(at + e.what());
    }
  }
  return t.result(10, "Weight path-independence",
                  std::to_string(kDagInstances) + " DAGs, " + std::to_string(paths) + " paths");
}

const std::vector<CriterionRunner>& criterion_runners() {
  static const std::vector<CriterionRunner> runners = {
      {"properties", {1, 11}, verify_nwa_bound},
      {"properties", {2},
       [](std::uint64_t s, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_spg_poa(s, o)};
       }},
      {"properties", {3},
       [](std::uint64_t s, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_psi_invariants(s, o)};
       }},
      {"properties", {4},
       [](std::uint64_t s, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_incremental_poa(s, o)};
       }},
      {"paper-facts", {5},
       [](std::uint64_t, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_multicast_facts(o)};
       }},
      {"paper-facts", {6},
       [](std::uint64_t, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_dag_convex_facts(o)};
       }},
      {"paper-facts", {7},
       [](std::uint64_t, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_overcharge_facts(o)};
       }},
      {"paper-facts", {8},
       [](std::uint64_t, const EnumerationOptions&) {
         return std::vector<CheckResult>{verify_static_share_facts()};
       }},
      {"properties", {9},
       [](std::uint64_t s, const EnumerationOptions& o) {
         return std::vector<CheckResult>{verify_single_path_optimum(s, o)};
       }},
      {"properties", {10},
       [](std::uint64_t s, const EnumerationOptions&) {
         return std::vector<CheckResult>{verify_weight_paths(s)};
       }},
  };
  return runners;
}

std::vector<std::string> suite_names() { return {"paper-facts", "properties"}; }

SuiteResult run_suite(std::string_view suite, std::uint64_t seed, const EnumerationOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorKind::kBadParams, "unknown suite '" + std::string(suite) + "'");
  }
  SuiteResult out;
  out.suite = std::string(suite);
  out.seed = seed;
  for (const CriterionRunner& r : criterion_runners()) {
    if (r.suite != suite) continue;
    for (CheckResult& c : r.run(seed, options)) out.checks.push_back(std::move(c));
  }
  std::sort(out.checks.begin(), out.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.criterion < b.criterion; });
  return out;
}

Json suite_to_json(const SuiteResult& result) {
  Json checks = Json::array();
  for (const CheckResult& c : result.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"status", c.pass ? "pass" : "fail"},
                      {"detail", c.detail}});
  }
  return {{"suite", result.suite},
          {"seed", result.seed},
          {"passed", result.passed()},
          {"checks", checks}};
}

}  // namespace netshare
