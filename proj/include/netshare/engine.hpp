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

#ifndef NETSHARE_ENGINE_HPP_
#define NETSHARE_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netshare/cost.hpp"
#include "netshare/graph.hpp"
#include "netshare/profile.hpp"
#include "netshare/protocols.hpp"
#include "netshare/rational.hpp"

namespace netshare {

inline constexpr std::uint64_t kDefaultMaxProfiles = 10'000'000;

struct EnumerationOptions {
  std::uint64_t max_profiles = kDefaultMaxProfiles;
  std::size_t max_paths = kDefaultMaxPaths;
  int threads = 1;
};

// Per-player strategy sets, each in lexicographic edge-id order.
struct StrategySpace {
  std::vector<std::vector<Path>> paths;  // indexed by player position

  // Product of the set sizes. Throws kPathExplosion above `cap`.
  std::uint64_t profile_count(std::uint64_t cap) const;
};

StrategySpace strategy_space(const GameInstance& instance, std::size_t max_paths = kDefaultMaxPaths);

struct NashWitness {
  int player = 0;           // player id
  std::size_t position = 0;  // index into instance.players
  Path from;
  Path to;
  Rat old_total;
  Rat new_total;
};

struct NashResult {
  bool is_nash = true;
  std::optional<NashWitness> witness;
  // Deviations whose total equalled the current total exactly.
  long tie_hits = 0;
};

// Checks unilateral deviations of every player, lowest id first. The witness
// is the best deviation of the lowest-id improving player (ties towards the
// lexicographically smallest path). Ties are counted only for protocols that
// certify tie-freeness; all their deviations are then scanned.
NashResult is_nash(const Protocol& protocol, const StrategyProfile& profile,
                   std::size_t max_paths = kDefaultMaxPaths);

struct PneResult {
  std::vector<StrategyProfile> pne;  // lexicographic profile order
  long tie_hits = 0;
  std::uint64_t profiles_scanned = 0;
};

PneResult enumerate_pne(const Protocol& protocol, const EnumerationOptions& options = {});

struct OptimumResult {
  StrategyProfile profile;
  Rat cost;
};

// Exact social optimum under the instance's own costs; the lexicographically
// first minimizer is returned.
OptimumResult brute_force_optimum(const GameInstance& instance,
                                  const EnumerationOptions& options = {});

struct BrdResult {
  StrategyProfile profile;
  bool converged = false;
  bool cycled = false;
  std::vector<NashWitness> trace;
  long tie_hits = 0;
};

BrdResult best_response_dynamics(const Protocol& protocol, StrategyProfile start, long max_iters,
                                 std::size_t max_paths = kDefaultMaxPaths);

// Charged social cost: sum_e charged_cost(e, l_e).
Rat charged_profile_cost(const Protocol& protocol, const StrategyProfile& profile);

// sum_e max_{1 <= l <= n_max} (perturbed c_e(l) - original c_e(l)).
Rat perturbation_total(const GameInstance& original, const GameInstance& perturbed);

struct EpsAccounting {
  Rat eps1;
  Rat eps2;
};

struct AnalysisReport {
  ProtocolKind protocol = ProtocolKind::kEqualSplit;
  bool overcharged = false;
  std::vector<StrategyProfile> pne;
  std::optional<Rat> worst_eq_cost;
  std::optional<Rat> best_eq_cost;
  Rat opt_cost;
  StrategyProfile opt_profile;
  // worst / opt; nullopt without equilibria. 0/0 counts as 1, x/0 as inf.
  std::optional<Rat> poa;
  long tie_detector_hits = 0;
  std::optional<EpsAccounting> eps;
  std::uint64_t profiles_scanned = 0;

  bool no_equilibrium() const { return pne.empty(); }
};

// `original` is the pre-perturbation instance when perturb_for_ties was
// applied; the optimum is always computed on it. Without it, eps1 is taken
// from the instance's perturbation record (zero when there is none).
AnalysisReport poa_report(const Protocol& protocol, const EnumerationOptions& options = {},
                          const GameInstance* original = nullptr);

}  // namespace netshare

#endif  // NETSHARE_ENGINE_HPP_
