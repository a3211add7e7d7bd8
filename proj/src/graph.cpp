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

#include "netshare/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "netshare/error.hpp"

namespace netshare {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw Error(ErrorKind::kBadParams, "negative vertex count");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  out_.assign(static_cast<size_t>(num_vertices_), {});
  in_.assign(static_cast<size_t>(num_vertices_), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i)) {
      throw Error(ErrorKind::kBadParams, "edge ids must be dense 0..m-1 and unique");
    }
    if (!has_vertex(e.tail) || !has_vertex(e.head)) {
      throw Error(ErrorKind::kBadParams, "edge " + std::to_string(e.id) + " has unknown endpoint");
    }
    out_[static_cast<size_t>(e.tail)].push_back(e.id);
    in_[static_cast<size_t>(e.head)].push_back(e.id);
  }
}

std::vector<VertexId> topo_sort(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> indegree(static_cast<size_t>(n), 0);
  for (const Edge& e : graph.edges()) ++indegree[static_cast<size_t>(e.head)];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[static_cast<size_t>(v)] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(static_cast<size_t>(n));
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (EdgeId id : graph.out_edges(v)) {
      VertexId h = graph.edge(id).head;
      if (--indegree[static_cast<size_t>(h)] == 0) ready.push(h);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::kCycleDetected, "graph has a directed cycle");
  }
  return order;
}

WeightAssignment assign_weights(const Graph& graph) {
  WeightAssignment out;
  out.omega.assign(static_cast<size_t>(graph.num_vertices()), 0);
  std::vector<VertexId> order = topo_sort(graph);
  for (size_t pos = 0; pos < order.size(); ++pos) {
    out.omega[static_cast<size_t>(order[pos])] = static_cast<long>(pos);
  }
  out.w.reserve(static_cast<size_t>(graph.num_edges()));
  for (const Edge& e : graph.edges()) {
    out.w.push_back(out.omega[static_cast<size_t>(e.head)] - out.omega[static_cast<size_t>(e.tail)]);
  }
  return out;
}

std::vector<bool> reachable_from(const Graph& graph, VertexId from) {
  std::vector<bool> seen(static_cast<size_t>(graph.num_vertices()), false);
  if (!graph.has_vertex(from)) return seen;
  std::vector<VertexId> stack{from};
  seen[static_cast<size_t>(from)] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : graph.out_edges(v)) {
      VertexId h = graph.edge(id).head;
      if (!seen[static_cast<size_t>(h)]) {
        seen[static_cast<size_t>(h)] = true;
        stack.push_back(h);
      }
    }
  }
  return seen;
}

std::vector<Path> enumerate_paths(const Graph& graph, VertexId source, VertexId sink,
                                  std::size_t cap) {
  return enumerate_paths(graph, source, sink,
                         std::vector<bool>(static_cast<size_t>(graph.num_edges()), true), cap);
}

std::vector<Path> enumerate_paths(const Graph& graph, VertexId source, VertexId sink,
                                  const std::vector<bool>& allowed, std::size_t cap) {
  if (!graph.has_vertex(source) || !graph.has_vertex(sink)) {
    throw Error(ErrorKind::kBadParams, "path endpoints must be graph vertices");
  }
  // Backward reachability to the sink over allowed edges prunes dead ends.
  std::vector<bool> reaches(static_cast<size_t>(graph.num_vertices()), false);
  {
    std::vector<VertexId> stack{sink};
    reaches[static_cast<size_t>(sink)] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId id : graph.in_edges(v)) {
        if (!allowed[static_cast<size_t>(id)]) continue;
        VertexId t = graph.edge(id).tail;
        if (!reaches[static_cast<size_t>(t)]) {
          reaches[static_cast<size_t>(t)] = true;
          stack.push_back(t);
        }
      }
    }
  }
  std::vector<Path> out;
  if (!reaches[static_cast<size_t>(source)]) return out;
  Path current;
  std::vector<bool> on_path(static_cast<size_t>(graph.num_vertices()), false);
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (v == sink) {
      if (out.size() >= cap) {
        throw Error(ErrorKind::kPathExplosion,
                    "more than " + std::to_string(cap) + " paths");
      }
      out.push_back(current);
      return;
    }
    on_path[static_cast<size_t>(v)] = true;
    for (EdgeId id : graph.out_edges(v)) {
      if (!allowed[static_cast<size_t>(id)]) continue;
      VertexId h = graph.edge(id).head;
      if (!reaches[static_cast<size_t>(h)] || on_path[static_cast<size_t>(h)]) continue;
      current.push_back(id);
      dfs(h);
      current.pop_back();
    }
    on_path[static_cast<size_t>(v)] = false;
  };
  dfs(source);
  return out;
}

bool is_path(const Graph& graph, const Path& path, VertexId source, VertexId sink) {
  if (!graph.has_vertex(source) || !graph.has_vertex(sink)) return false;
  VertexId at = source;
  std::vector<bool> visited(static_cast<size_t>(graph.num_vertices()), false);
  visited[static_cast<size_t>(at)] = true;
  for (EdgeId id : path) {
    if (id < 0 || id >= graph.num_edges()) return false;
    const Edge& e = graph.edge(id);
    if (e.tail != at) return false;
    at = e.head;
    if (visited[static_cast<size_t>(at)]) return false;
    visited[static_cast<size_t>(at)] = true;
  }
  return at == sink;
}

}  // namespace netshare
