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

#include "netshare/sp_tree.hpp"

#include <string>

#include "netshare/error.hpp"

namespace netshare {

int SPTree::add_leaf(const Graph& graph, EdgeId edge) {
  if (edge < 0 || edge >= graph.num_edges()) {
    throw Error(ErrorKind::kEdgeCoverage, "leaf references unknown edge " + std::to_string(edge));
  }
  const Edge& e = graph.edge(edge);
  nodes_.push_back({Kind::kLeaf, edge, -1, -1, e.tail, e.head});
  return size() - 1;
}

int SPTree::add_series(int left, int right) {
  const Node& l = node(left);
  const Node& r = node(right);
  if (l.sink != r.source) {
    throw Error(ErrorKind::kTerminalMismatch,
                "series glue " + std::to_string(l.sink) + " != " + std::to_string(r.source));
  }
  nodes_.push_back({Kind::kSeries, -1, left, right, l.source, r.sink});
  return size() - 1;
}

int SPTree::add_parallel(int left, int right) {
  const Node& l = node(left);
  const Node& r = node(right);
  if (l.source != r.source || l.sink != r.sink) {
    throw Error(ErrorKind::kTerminalMismatch, "parallel children have different terminals");
  }
  nodes_.push_back({Kind::kParallel, -1, left, right, l.source, l.sink});
  return size() - 1;
}

void SPTree::finish(const Graph& graph, int root) {
  root_ = root;
  leaf_of_.assign(static_cast<size_t>(graph.num_edges()), -1);
  std::vector<int> stack{root};
  std::vector<bool> reached(nodes_.size(), false);
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (reached[static_cast<size_t>(c)]) {
      throw Error(ErrorKind::kEdgeCoverage, "tree node shared between parents");
    }
    reached[static_cast<size_t>(c)] = true;
    const Node& n = node(c);
    if (n.kind == Kind::kLeaf) {
      int& slot = leaf_of_[static_cast<size_t>(n.edge)];
      if (slot != -1) {
        throw Error(ErrorKind::kEdgeCoverage, "edge " + std::to_string(n.edge) + " appears twice");
      }
      slot = c;
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  for (size_t e = 0; e < leaf_of_.size(); ++e) {
    if (leaf_of_[e] == -1) {
      throw Error(ErrorKind::kEdgeCoverage, "edge " + std::to_string(e) + " missing from tree");
    }
  }
}

std::vector<bool> SPTree::edges_under(int index) const {
  std::vector<bool> out(leaf_of_.size(), false);
  std::vector<int> stack{index};
  while (!stack.empty()) {
    const Node& n = node(stack.back());
    stack.pop_back();
    if (n.kind == Kind::kLeaf) {
      out[static_cast<size_t>(n.edge)] = true;
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  return out;
}

std::vector<int> SPTree::postorder() const {
  std::vector<int> out;
  std::vector<std::pair<int, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [c, expanded] = stack.back();
    stack.pop_back();
    const Node& n = node(c);
    if (expanded || n.kind == Kind::kLeaf) {
      out.push_back(c);
      continue;
    }
    stack.push_back({c, true});
    stack.push_back({n.right, false});
    stack.push_back({n.left, false});
  }
  return out;
}

namespace {

int parse_node(SPTree& tree, const Graph& graph, const nlohmann::ordered_json& d) {
  if (d.is_object()) {
    if (!d.contains("edge") || !d["edge"].is_number_integer()) {
      throw Error(ErrorKind::kParse, "leaf must be {\"edge\": id}");
    }
    return tree.add_leaf(graph, d["edge"].get<int>());
  }
  if (!d.is_array() || d.size() < 3 || !d[0].is_string()) {
    throw Error(ErrorKind::kParse, "composition must be [\"S\"|\"P\", child, child, ...]");
  }
  const std::string op = d[0].get<std::string>();
  if (op != "S" && op != "P") throw Error(ErrorKind::kParse, "unknown composition '" + op + "'");
  int acc = parse_node(tree, graph, d[1]);
  for (size_t i = 2; i < d.size(); ++i) {
    int next = parse_node(tree, graph, d[i]);
    acc = op == "S" ? tree.add_series(acc, next) : tree.add_parallel(acc, next);
  }
  return acc;
}

nlohmann::ordered_json node_to_json(const SPTree& tree, int c) {
  const SPTree::Node& n = tree.node(c);
  if (n.kind == SPTree::Kind::kLeaf) return {{"edge", n.edge}};
  return nlohmann::ordered_json::array({n.kind == SPTree::Kind::kSeries ? "S" : "P",
                                        node_to_json(tree, n.left),
                                        node_to_json(tree, n.right)});
}

}  // namespace

SPTree parse_sp_tree(const Graph& graph, const nlohmann::ordered_json& description) {
  SPTree tree;
  int root = parse_node(tree, graph, description);
  tree.finish(graph, root);
  return tree;
}

nlohmann::ordered_json sp_tree_to_json(const SPTree& tree) {
  return node_to_json(tree, tree.root());
}

std::vector<std::vector<Rat>> compute_phi(const SPTree& tree, const GameInstance& instance) {
  const size_t width = static_cast<size_t>(instance.n_max) + 1;
  std::vector<std::vector<Rat>> phi(static_cast<size_t>(tree.size()));
  for (int c : tree.postorder()) {
    const SPTree::Node& n = tree.node(c);
    auto& out = phi[static_cast<size_t>(c)];
    if (n.kind == SPTree::Kind::kLeaf) {
      out = instance.costs.at(static_cast<size_t>(n.edge)).values();
      continue;
    }
    const auto& a = phi[static_cast<size_t>(n.left)];
    const auto& b = phi[static_cast<size_t>(n.right)];
    out.resize(width);
    for (size_t l = 0; l < width; ++l) {
      out[l] = n.kind == SPTree::Kind::kSeries ? a[l] + b[l] : min(a[l], b[l]);
    }
  }
  return phi;
}

std::vector<std::optional<long>> compute_lstar(const SPTree& tree, const OptTable& opt) {
  std::vector<std::optional<long>> lstar(static_cast<size_t>(tree.size()));
  // Leaves first, then children-before-parents min.
  for (int c : tree.postorder()) {
    const SPTree::Node& n = tree.node(c);
    auto& out = lstar[static_cast<size_t>(c)];
    if (n.kind == SPTree::Kind::kLeaf) {
      for (long l = 1; l <= opt.max_load(); ++l) {
        if (opt.contains(l, n.edge)) {
          out = l;
          break;
        }
      }
      continue;
    }
    const auto& a = lstar[static_cast<size_t>(n.left)];
    const auto& b = lstar[static_cast<size_t>(n.right)];
    if (a && b) {
      out = std::min(*a, *b);
    } else {
      out = a ? a : b;
    }
  }
  return lstar;
}

PsiResult compute_psi(const SPTree& tree, const std::vector<std::vector<Rat>>& phi,
                      const std::vector<std::optional<long>>& lstar, long n_max) {
  PsiResult out;
  out.node.assign(static_cast<size_t>(tree.size()), Rat(0));
  auto phi_at = [&](int c, long l) -> const Rat& {
    return phi[static_cast<size_t>(c)][static_cast<size_t>(l)];
  };
  out.node[static_cast<size_t>(tree.root())] = phi_at(tree.root(), 1);
  std::vector<int> stack{tree.root()};
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    const SPTree::Node& n = tree.node(c);
    if (n.kind == SPTree::Kind::kLeaf) continue;
    const Rat psi = out.node[static_cast<size_t>(c)];
    Rat& left = out.node[static_cast<size_t>(n.left)];
    Rat& right = out.node[static_cast<size_t>(n.right)];
    stack.push_back(n.left);
    stack.push_back(n.right);
    if (n.kind == SPTree::Kind::kParallel) {
      left = psi;
      right = psi;
      continue;
    }
    const auto& ls = lstar[static_cast<size_t>(c)];
    if (!ls) ++out.never_used_series;
    const long ref = ls ? *ls : n_max;
    const Rat& whole = phi_at(c, ref);
    if (whole.is_zero()) {
      // phi_C(1) = 0 forces psi_C = 0.
      left = Rat(0);
      right = psi;
      continue;
    }
    const Rat prop_left = psi * phi_at(n.left, ref) / whole;
    const Rat prop_right = psi * phi_at(n.right, ref) / whole;
    const bool first = phi_at(n.left, 1) < prop_left;
    const bool second = phi_at(n.right, 1) < prop_right;
    if (first && second) ++out.both_cases;
    if (first) {
      left = phi_at(n.left, 1);
      right = psi - left;
    } else if (second) {
      right = phi_at(n.right, 1);
      left = psi - right;
    } else {
      left = prop_left;
      right = prop_right;
    }
  }
  int edges = 0;
  for (int c = 0; c < tree.size(); ++c) {
    if (tree.node(c).kind == SPTree::Kind::kLeaf) ++edges;
  }
  out.edge.assign(static_cast<size_t>(edges), Rat(0));
  for (EdgeId e = 0; e < edges; ++e) {
    out.edge[static_cast<size_t>(e)] = out.node[static_cast<size_t>(tree.leaf_of(e))];
  }
  return out;
}

SPAnnotations annotate(const SPTree& tree, const GameInstance& instance, const OptTable& opt) {
  SPAnnotations a;
  a.phi = compute_phi(tree, instance);
  a.lstar = compute_lstar(tree, opt);
  a.psi = compute_psi(tree, a.phi, a.lstar, instance.n_max);
  for (const CostTable& c : instance.costs) {
    if (!classify(c).strictly_concave) a.strict_leaves = false;
  }
  return a;
}

}  // namespace netshare
