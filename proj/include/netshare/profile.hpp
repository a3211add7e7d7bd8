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

#ifndef NETSHARE_PROFILE_HPP_
#define NETSHARE_PROFILE_HPP_

#include <optional>
#include <vector>

#include "netshare/cost.hpp"
#include "netshare/graph.hpp"
#include "netshare/rational.hpp"

namespace netshare {

// paths[i] is the path of instance.players[i].
struct StrategyProfile {
  std::vector<Path> paths;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

// loads[e] = number of players whose path contains e.
using LoadVector = std::vector<long>;

LoadVector load_vector(const Graph& graph, const StrategyProfile& profile);

// Throws kBadParams unless every path connects its player's terminals.
void check_profile(const GameInstance& instance, const StrategyProfile& profile);

// C(s) = sum_e c_e(l_e(s)); +inf propagates.
Rat profile_cost(const StrategyProfile& profile, const Graph& graph,
                 const std::vector<CostTable>& costs);

// Id of the highest-priority (smallest id) player on `edge`, if any.
std::optional<int> leader(const GameInstance& instance, const StrategyProfile& profile,
                          EdgeId edge);

// OPT(l) for l = 1..max_load: cheapest single source->sink path under edge
// costs c_e(l), ties broken towards the lexicographically smallest edge-id
// sequence.
class OptTable {
 public:
  OptTable() = default;
  explicit OptTable(std::vector<Path> by_load) : by_load_(std::move(by_load)) {}

  long max_load() const { return static_cast<long>(by_load_.size()) - 1; }
  const Path& at(long load) const { return by_load_.at(static_cast<size_t>(load)); }
  bool contains(long load, EdgeId edge) const;

 private:
  std::vector<Path> by_load_;  // index 0 unused
};

// Requires a symmetric instance with finite costs up to max_load (default
// n_max). Throws kNotSymmetric, kUnreachable, kInfiniteCost.
OptTable opt_path_table(const GameInstance& instance, long max_load = -1);

}  // namespace netshare

#endif  // NETSHARE_PROFILE_HPP_
