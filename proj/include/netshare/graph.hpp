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

#ifndef NETSHARE_GRAPH_HPP_
#define NETSHARE_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace netshare {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Ordered edge-id sequence. In a DAG every path is simple.
using Path = std::vector<EdgeId>;

// Directed multigraph over vertices 0..V-1 with dense edge ids 0..m-1.
// Acyclicity is not enforced here; topo_sort reports cycles.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<size_t>(id)); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Outgoing edge ids of v in ascending id order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(static_cast<size_t>(v)); }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(static_cast<size_t>(v)); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices_; }

  std::optional<VertexId> source;
  std::optional<VertexId> sink;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
           a.source == b.source && a.sink == b.sink;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

// Kahn's algorithm; among ready vertices the smallest id goes first.
// Throws kCycleDetected.
std::vector<VertexId> topo_sort(const Graph& graph);

// omega[v] is the 0-based topological position of v and w[e] = omega[head] -
// omega[tail] > 0, so every u->v path has weight omega[v] - omega[u].
struct WeightAssignment {
  std::vector<long> omega;
  std::vector<long> w;
};

WeightAssignment assign_weights(const Graph& graph);

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

// All source->sink paths in lexicographic edge-id order (depth first, out
// edges ascending). Throws kPathExplosion once more than `cap` paths exist.
std::vector<Path> enumerate_paths(const Graph& graph, VertexId source, VertexId sink,
                                  std::size_t cap = kDefaultMaxPaths);

// Same enumeration restricted to edges with allowed[e] set.
std::vector<Path> enumerate_paths(const Graph& graph, VertexId source, VertexId sink,
                                  const std::vector<bool>& allowed,
                                  std::size_t cap = kDefaultMaxPaths);

bool is_path(const Graph& graph, const Path& path, VertexId source, VertexId sink);

// reach[v] is true iff v is reachable from `from` (including `from`).
std::vector<bool> reachable_from(const Graph& graph, VertexId from);

}  // namespace netshare

#endif  // NETSHARE_GRAPH_HPP_
