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

#ifndef NETSHARE_PROTOCOLS_HPP_
#define NETSHARE_PROTOCOLS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netshare/cost.hpp"
#include "netshare/graph.hpp"
#include "netshare/profile.hpp"
#include "netshare/rational.hpp"
#include "netshare/sp_tree.hpp"

namespace netshare {

enum class ProtocolKind { kEqualSplit, kIncremental, kLeaderBased, kStaticShare, kSpg, kNwa };

std::string protocol_name(ProtocolKind kind);
// Throws kBadParams for unknown names.
ProtocolKind parse_protocol_name(std::string_view name);

// A resource-aware share rule. The share of a user of edge e depends only on
// the load of e and on the user's rank among the users of e (the number of
// users with a smaller id; rank 0 is the leader).
class Protocol {
 public:
  explicit Protocol(GameInstance instance) : instance_(std::move(instance)) {}
  virtual ~Protocol() = default;

  virtual ProtocolKind kind() const = 0;
  // 1 <= load, 0 <= rank < load.
  virtual Rat share(EdgeId edge, long load, long rank) const = 0;
  // Total collected on `edge` at `load`; c_e(load) unless overcharging.
  virtual Rat charged_cost(EdgeId edge, long load) const;
  virtual bool overcharges() const { return false; }
  // Whether runs of this protocol are expected to be tie-free.
  virtual bool certifies_ties() const { return false; }
  // Whether the protocol guarantees a pure Nash equilibrium on its domain.
  virtual bool claims_stable() const { return false; }

  const GameInstance& instance() const { return instance_; }
  // Largest load any share may be asked for.
  long max_load() const { return static_cast<long>(instance_.players.size()); }

 private:
  GameInstance instance_;
};

class EqualSplit final : public Protocol {
 public:
  using Protocol::Protocol;
  ProtocolKind kind() const override { return ProtocolKind::kEqualSplit; }
  Rat share(EdgeId edge, long load, long rank) const override;
  bool claims_stable() const override { return true; }
};

class Incremental final : public Protocol {
 public:
  using Protocol::Protocol;
  ProtocolKind kind() const override { return ProtocolKind::kIncremental; }
  Rat share(EdgeId edge, long load, long rank) const override;
  bool claims_stable() const override { return true; }
};

// Leader pays psi_e(l); the others split c_e(l) - psi_e(l) evenly.
class LeaderBasedProtocol : public Protocol {
 public:
  using Protocol::Protocol;
  Rat share(EdgeId edge, long load, long rank) const override;
  virtual Rat psi(EdgeId edge, long load) const = 0;
};

// psi[e][l] for l = 0..max_load (index 0 unused).
struct LeaderShareRule {
  std::vector<std::vector<Rat>> psi;
};

class LeaderBased final : public LeaderBasedProtocol {
 public:
  // Throws kShareExceedsCost unless psi_e(l) <= c_e(l).
  LeaderBased(GameInstance instance, LeaderShareRule rule);
  ProtocolKind kind() const override { return ProtocolKind::kLeaderBased; }
  Rat psi(EdgeId edge, long load) const override;

 private:
  LeaderShareRule rule_;
};

// psi_e(l) = psi_e if e in OPT(l), c_e(l) otherwise. Used for the
// series-parallel protocol with psi_e taken from the SP annotations.
class StaticShare final : public LeaderBasedProtocol {
 public:
  // Throws kShareExceedsCost if psi_e > c_e(l) for some l with e in OPT(l).
  StaticShare(GameInstance instance, OptTable opt, std::vector<Rat> psi, bool spg);
  ProtocolKind kind() const override {
    return spg_ ? ProtocolKind::kSpg : ProtocolKind::kStaticShare;
  }
  Rat psi(EdgeId edge, long load) const override;
  bool claims_stable() const override { return spg_; }
  const OptTable& opt() const { return opt_; }
  const std::vector<Rat>& edge_psi() const { return psi_; }

 private:
  OptTable opt_;
  std::vector<Rat> psi_;
  bool spg_;
};

// Precomputed data of the never-walk-alone protocol.
struct NwaContext {
  WeightAssignment weights;
  OptTable opt;
  Rat big_c;  // C = 2 sum_e c_e(n_max) + 1
  Rat eps;    // min_e c_e(1) / (2 sum_e w_e)
  std::vector<std::vector<Rat>> zeta;  // zeta[e][l], l = 0..max_load
  std::vector<std::vector<Rat>> hat;   // overcharged c^_e(l)
  Rat eps2;   // sum_e eps_e(0)

  // eps_e(x) = (w_e C - x) eps / C.
  Rat eps_e(EdgeId edge, const Rat& x) const;
};

// Requires a symmetric instance with finite concave costs and c_e(1) > 0.
// Throws kNotSymmetric, kInfiniteCost, kNotConcave, kZeroUnitCost.
NwaContext nwa_context(const GameInstance& instance);

class Nwa final : public Protocol {
 public:
  explicit Nwa(GameInstance instance);
  ProtocolKind kind() const override { return ProtocolKind::kNwa; }
  Rat share(EdgeId edge, long load, long rank) const override;
  Rat charged_cost(EdgeId edge, long load) const override;
  bool overcharges() const override { return true; }
  bool certifies_ties() const override { return true; }
  bool claims_stable() const override { return true; }
  const NwaContext& context() const { return ctx_; }

 private:
  NwaContext ctx_;
};

// Static-share leader-based rule as a dense table. Throws kShareExceedsCost.
LeaderShareRule static_share_rule(const GameInstance& instance, const OptTable& opt,
                                  const std::vector<Rat>& psi);

struct SpgBuild {
  std::unique_ptr<StaticShare> protocol;
  SPAnnotations annotations;
};

// Series-parallel protocol for a symmetric instance and its composition tree.
SpgBuild make_spg(const GameInstance& instance, const SPTree& tree);

// Builds any protocol by kind. Leader-based needs a rule and static-share
// needs per-edge psi values, both passed via `psi`; spg needs `tree`.
// Throws kProtocolInapplicable when preconditions fail.
std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, const GameInstance& instance,
                                        const std::optional<SPTree>& tree = std::nullopt,
                                        const std::optional<std::vector<Rat>>& psi = std::nullopt);

// xi[i][e]: share of player position i on edge e (zero off its path).
struct ShareMatrix {
  std::vector<std::vector<Rat>> xi;

  Rat player_total(size_t player) const;
  Rat edge_total(EdgeId edge) const;
};

ShareMatrix compute_shares(const Protocol& protocol, const StrategyProfile& profile);

ShareMatrix equal_split_shares(const GameInstance& instance, const StrategyProfile& profile);
ShareMatrix incremental_shares(const GameInstance& instance, const StrategyProfile& profile);
ShareMatrix leader_based_shares(const GameInstance& instance, const StrategyProfile& profile,
                                const LeaderShareRule& rule);
ShareMatrix spg_protocol_shares(const GameInstance& instance, const StrategyProfile& profile,
                                const SPAnnotations& annotations, const OptTable& opt);
ShareMatrix nwa_shares(const Nwa& protocol, const StrategyProfile& profile);

}  // namespace netshare

#endif  // NETSHARE_PROTOCOLS_HPP_
