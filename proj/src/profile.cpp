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

#include "netshare/profile.hpp"

#include <algorithm>
#include <string>

#include "netshare/error.hpp"

namespace netshare {

LoadVector load_vector(const Graph& graph, const StrategyProfile& profile) {
  LoadVector loads(static_cast<size_t>(graph.num_edges()), 0);
  for (const Path& p : profile.paths) {
    for (EdgeId e : p) ++loads[static_cast<size_t>(e)];
  }
  return loads;
}

void check_profile(const GameInstance& instance, const StrategyProfile& profile) {
  if (profile.paths.size() != instance.players.size()) {
    throw Error(ErrorKind::kBadParams, "profile must assign one path per player");
  }
  for (size_t i = 0; i < profile.paths.size(); ++i) {
    const Player& p = instance.players[i];
    if (!is_path(instance.graph, profile.paths[i], p.source, p.sink)) {
      throw Error(ErrorKind::kBadParams,
                  "path of player " + std::to_string(p.id) + " does not connect its terminals");
    }
  }
}

Rat profile_cost(const StrategyProfile& profile, const Graph& graph,
                 const std::vector<CostTable>& costs) {
  LoadVector loads = load_vector(graph, profile);
  Rat total(0);
  for (size_t e = 0; e < loads.size(); ++e) {
    if (loads[e] > 0) total += costs[e].at(loads[e]);
  }
  return total;
}

std::optional<int> leader(const GameInstance& instance, const StrategyProfile& profile,
                          EdgeId edge) {
  std::optional<int> best;
  for (size_t i = 0; i < profile.paths.size(); ++i) {
    const Path& p = profile.paths[i];
    if (std::find(p.begin(), p.end(), edge) == p.end()) continue;
    int id = instance.players[i].id;
    if (!best || id < *best) best = id;
  }
  return best;
}

bool OptTable::contains(long load, EdgeId edge) const {
  const Path& p = at(load);
  return std::find(p.begin(), p.end(), edge) != p.end();
}

OptTable opt_path_table(const GameInstance& instance, long max_load) {
  if (!instance.symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "OPT(l) needs a symmetric instance");
  }
  if (max_load < 0) max_load = instance.n_max;
  const Graph& g = instance.graph;
  const VertexId s = instance.players.front().source;
  const VertexId t = instance.players.front().sink;
  const std::vector<VertexId> order = topo_sort(g);
  const size_t nv = static_cast<size_t>(g.num_vertices());

  std::vector<Path> table(static_cast<size_t>(max_load) + 1);
  std::vector<Rat> weight(static_cast<size_t>(g.num_edges()));
  std::vector<std::optional<Rat>> dist(nv);
  std::vector<Path> best(nv);
  for (long load = 1; load <= max_load; ++load) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      weight[static_cast<size_t>(e)] = instance.costs[static_cast<size_t>(e)].at(load);
      if (weight[static_cast<size_t>(e)].is_inf()) {
        throw Error(ErrorKind::kInfiniteCost, "OPT(l) needs finite costs");
      }
    }
    std::fill(dist.begin(), dist.end(), std::nullopt);
    dist[static_cast<size_t>(s)] = Rat(0);
    best[static_cast<size_t>(s)].clear();
    for (VertexId v : order) {
      if (!dist[static_cast<size_t>(v)]) continue;
      for (EdgeId e : g.out_edges(v)) {
        const VertexId h = g.edge(e).head;
        Rat cand = *dist[static_cast<size_t>(v)] + weight[static_cast<size_t>(e)];
        auto& dh = dist[static_cast<size_t>(h)];
        bool take = !dh || cand < *dh;
        if (!take && cand == *dh) {
          Path alt = best[static_cast<size_t>(v)];
          alt.push_back(e);
          take = alt < best[static_cast<size_t>(h)];
        }
        if (take) {
          dh = std::move(cand);
          best[static_cast<size_t>(h)] = best[static_cast<size_t>(v)];
          best[static_cast<size_t>(h)].push_back(e);
        }
      }
    }
    if (!dist[static_cast<size_t>(t)]) {
      throw Error(ErrorKind::kUnreachable, "sink unreachable from source");
    }
    table[static_cast<size_t>(load)] = best[static_cast<size_t>(t)];
  }
  return OptTable(std::move(table));
}

}  // namespace netshare
