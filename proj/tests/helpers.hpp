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

#ifndef NETSHARE_TESTS_HELPERS_HPP_
#define NETSHARE_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <optional>
#include <vector>

#include "netshare/cost.hpp"
#include "netshare/error.hpp"
#include "netshare/generators.hpp"
#include "netshare/rational.hpp"

namespace netshare::testing {

inline Rat R(const char* text) { return Rat::parse(text); }

// Kind of the netshare::Error thrown by fn, if any.
template <typename Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline CostTable table(std::initializer_list<long> values) {
  std::vector<Rat> v;
  for (long x : values) v.emplace_back(x);
  return CostTable::from_values(v);
}

inline CostTable table(std::initializer_list<const char*> values) {
  std::vector<Rat> v;
  for (const char* x : values) v.push_back(Rat::parse(x));
  return CostTable::from_values(v);
}

// Symmetric instance over `vertices` with the given edges and tables.
inline GameInstance make_instance(int vertices, std::vector<Edge> edges,
                                  std::vector<CostTable> costs, int players, VertexId s,
                                  VertexId t) {
  GameInstance in;
  in.graph = Graph(vertices, std::move(edges));
  in.graph.source = s;
  in.graph.sink = t;
  in.n_max = costs.empty() ? 1 : costs.front().n_max();
  in.costs = std::move(costs);
  for (int i = 0; i < players; ++i) in.players.push_back({i, s, t});
  in.validate();
  return in;
}

// Two parallel s->t edges with the given tables.
inline GameInstance parallel_pair(const CostTable& a, const CostTable& b, int players) {
  return make_instance(2, {{0, 0, 1}, {1, 0, 1}}, {a, b}, players, 0, 1);
}

inline GenParams random_params(const char* family, const char* shape, std::uint64_t seed) {
  GenParams p;
  p.family = family;
  p.shape = shape;
  p.seed = seed;
  return p;
}

}  // namespace netshare::testing

#endif  // NETSHARE_TESTS_HELPERS_HPP_
