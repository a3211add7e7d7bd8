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

#ifndef NETSHARE_SP_TREE_HPP_
#define NETSHARE_SP_TREE_HPP_

#include <optional>
#include <vector>

#include "json.hpp"
#include "netshare/cost.hpp"
#include "netshare/graph.hpp"
#include "netshare/profile.hpp"
#include "netshare/rational.hpp"

namespace netshare {

// Binary series/parallel composition tree over the edges of a graph.
class SPTree {
 public:
  enum class Kind { kLeaf, kSeries, kParallel };

  struct Node {
    Kind kind = Kind::kLeaf;
    EdgeId edge = -1;  // leaves only
    int left = -1;
    int right = -1;
    VertexId source = 0;
    VertexId sink = 0;
  };

  // Builder interface; nodes are referenced by the returned index.
  int add_leaf(const Graph& graph, EdgeId edge);
  // Throws kTerminalMismatch unless left.sink == right.source.
  int add_series(int left, int right);
  // Throws kTerminalMismatch unless both terminals coincide.
  int add_parallel(int left, int right);
  // Fixes the root and checks that every graph edge appears exactly once.
  // Throws kEdgeCoverage.
  void finish(const Graph& graph, int root);

  int root() const { return root_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int index) const { return nodes_.at(static_cast<size_t>(index)); }
  // Leaf of each edge.
  int leaf_of(EdgeId edge) const { return leaf_of_.at(static_cast<size_t>(edge)); }
  // edges_under(c)[e] is true iff e is a leaf below c.
  std::vector<bool> edges_under(int index) const;
  // Nodes ordered so that children precede parents.
  std::vector<int> postorder() const;

 private:
  std::vector<Node> nodes_;
  std::vector<int> leaf_of_;
  int root_ = -1;
};

// Parses ["S"|"P", child, child, ...] / {"edge": id}. More than two children
// are associated left-deep. Throws kTerminalMismatch, kEdgeCoverage, kParse.
SPTree parse_sp_tree(const Graph& graph, const nlohmann::ordered_json& description);
nlohmann::ordered_json sp_tree_to_json(const SPTree& tree);

struct PsiResult {
  std::vector<Rat> node;  // psi_C per node
  std::vector<Rat> edge;  // psi_e per edge
  // Series nodes where both single-child cases held; the first one was used.
  int both_cases = 0;
  // Series nodes never entered by OPT(l), l <= n_max; split at l = n_max.
  int never_used_series = 0;
};

struct SPAnnotations {
  std::vector<std::vector<Rat>> phi;      // phi[node][l], l = 0..n_max
  std::vector<std::optional<long>> lstar;  // nullopt: never on OPT(l)
  PsiResult psi;
  // False when some leaf cost is not strictly concave; the strict psi bound
  // may then fail.
  bool strict_leaves = true;
};

// Leaf: c_e. Series: pointwise sum. Parallel: pointwise min.
std::vector<std::vector<Rat>> compute_phi(const SPTree& tree, const GameInstance& instance);

// lstar[C] = min{ l : OPT(l) uses an edge of C }.
std::vector<std::optional<long>> compute_lstar(const SPTree& tree, const OptTable& opt);

// Top-down psi assignment starting from psi_root = phi_root(1).
PsiResult compute_psi(const SPTree& tree, const std::vector<std::vector<Rat>>& phi,
                      const std::vector<std::optional<long>>& lstar, long n_max);

SPAnnotations annotate(const SPTree& tree, const GameInstance& instance, const OptTable& opt);

}  // namespace netshare

#endif  // NETSHARE_SP_TREE_HPP_
