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

#ifndef NETSHARE_COST_HPP_
#define NETSHARE_COST_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netshare/graph.hpp"
#include "netshare/rational.hpp"

namespace netshare {

struct CostShape {
  bool concave = false;
  bool strictly_concave = false;
  bool convex = false;
  bool constant = false;
  // Some load in 1..n_max has cost +inf.
  bool capacitated = false;

  friend bool operator==(const CostShape&, const CostShape&) = default;
};

// Load-indexed edge cost c(0..n_max) with c(0) = 0, non-decreasing, finite up
// to a capacity and +inf beyond it.
//
// Stored as runs of equal marginal cost so that long affine or capped tables
// (the static-share network has n_max in the hundreds of thousands) stay
// small. Dense tables are the special case of runs of length one.
class CostTable {
 public:
  struct Run {
    long count = 0;
    Rat marginal;

    friend bool operator==(const Run&, const Run&) = default;
  };

  CostTable() : CostTable(from_values({Rat(0), Rat(0)})) {}

  // values[l] = c(l) for l = 0..n_max. Throws kMalformedTable.
  static CostTable from_values(const std::vector<Rat>& values);
  // Marginal runs covering loads 1..sum(count); loads beyond are +inf.
  static CostTable from_runs(long n_max, std::vector<Run> runs);
  // c(l) = value for every l >= 1.
  static CostTable constant(long n_max, const Rat& value);
  // value for l <= capacity, +inf above.
  static CostTable capacitated_constant(long n_max, const Rat& value, long capacity);

  long n_max() const { return n_max_; }
  // Largest load with a finite cost.
  long capacity() const { return capacity_; }
  bool all_finite() const { return capacity_ == n_max_; }

  // c(load) for 0 <= load <= n_max.
  Rat at(long load) const;
  // c(load) - c(load - 1) for load >= 1; +inf past the capacity.
  Rat marginal(long load) const;
  std::vector<Rat> values() const;
  const std::vector<Run>& runs() const { return runs_; }

  friend bool operator==(const CostTable& a, const CostTable& b) {
    return a.n_max_ == b.n_max_ && a.runs_ == b.runs_;
  }

 private:
  CostTable(long n_max, std::vector<Run> runs);

  long n_max_ = 1;
  long capacity_ = 1;
  std::vector<Run> runs_;
  std::vector<long> starts_;  // first load covered by each run
  std::vector<Rat> bases_;    // c(start - 1) for each run
};

CostShape classify(const CostTable& cost);

struct Player {
  int id = 0;  // position in the global priority order; smaller = higher priority
  VertexId source = 0;
  VertexId sink = 0;

  friend bool operator==(const Player&, const Player&) = default;
};

struct PerturbationRecord {
  long r = 0;
  mpz_class k;
  long window = 0;
  // Sum over edges of the largest per-load increment.
  Rat total_increment;
};

struct GameInstance {
  Graph graph;
  std::vector<CostTable> costs;  // indexed by edge id
  std::vector<Player> players;
  long n_max = 1;
  std::map<std::string, std::string> metadata;
  std::optional<PerturbationRecord> perturbation;

  bool symmetric() const;
  bool multicast() const;
  bool all_finite() const;
  // Throws kBadParams / kCycleDetected / kUnreachable on invariant violations.
  void validate() const;
  // Same network and universe with only players[positions[i]] kept.
  GameInstance with_players(const std::vector<int>& positions) const;
  GameInstance with_player_count(int count) const;
};

// Rounds every cost up to a multiple of 10^-r, then adds the edge-specific
// increment K * 10^-(r + W * i) (i = edge id + 1) at every load >= 1, with
// K = lcm(1..n_max-1) and W = max(digits(2 K n_max) + 1, digits(2 K^2 + 1)).
// Throws kInfiniteCost.
GameInstance perturb_for_ties(const GameInstance& instance, long r);

// Strictly concave table c' with c <= c' <= (1 + eps) c on loads >= 1:
// c'(l) = c(l) + eps * c(1) * (1 - 2^-l).
// Throws kNotConcave, kInvalidEps (eps <= 0) or kZeroUnitCost (c(1) = 0).
CostTable strictify_concave(const CostTable& cost, const Rat& eps);

}  // namespace netshare

#endif  // NETSHARE_COST_HPP_
