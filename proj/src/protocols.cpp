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

#include "netshare/protocols.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netshare/error.hpp"

namespace netshare {

namespace {

constexpr long kDenseHorizon = 4096;

// Loads covered by OPT tables and dense share tables. Small universes are
// covered in full; huge ones only up to the active player count.
long horizon(const GameInstance& instance) {
  if (instance.n_max <= kDenseHorizon) return instance.n_max;
  return static_cast<long>(instance.players.size());
}

const CostTable& cost_of(const GameInstance& instance, EdgeId edge) {
  return instance.costs.at(static_cast<size_t>(edge));
}

}  // namespace

std::string protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kEqualSplit: return "equal-split";
    case ProtocolKind::kIncremental: return "incremental";
    case ProtocolKind::kLeaderBased: return "leader-based";
    case ProtocolKind::kStaticShare: return "static-share";
    case ProtocolKind::kSpg: return "spg";
    case ProtocolKind::kNwa: return "nwa";
  }
  return "unknown";
}

ProtocolKind parse_protocol_name(std::string_view name) {
  for (ProtocolKind k : {ProtocolKind::kEqualSplit, ProtocolKind::kIncremental,
                         ProtocolKind::kLeaderBased, ProtocolKind::kStaticShare,
                         ProtocolKind::kSpg, ProtocolKind::kNwa}) {
    if (protocol_name(k) == name) return k;
  }
  throw Error(ErrorKind::kBadParams, "unknown protocol '" + std::string(name) + "'");
}

Rat Protocol::charged_cost(EdgeId edge, long load) const {
  return cost_of(instance_, edge).at(load);
}

Rat EqualSplit::share(EdgeId edge, long load, long /*rank*/) const {
  return cost_of(instance(), edge).at(load) / Rat(load);
}

Rat Incremental::share(EdgeId edge, long /*load*/, long rank) const {
  const CostTable& c = cost_of(instance(), edge);
  return c.marginal(rank + 1);
}

Rat LeaderBasedProtocol::share(EdgeId edge, long load, long rank) const {
  const Rat p = psi(edge, load);
  if (rank == 0) return p;
  const Rat c = cost_of(instance(), edge).at(load);
  if (p == c) return Rat(0);
  return (c - p) / Rat(load - 1);
}

LeaderBased::LeaderBased(GameInstance instance, LeaderShareRule rule)
    : LeaderBasedProtocol(std::move(instance)), rule_(std::move(rule)) {
  const GameInstance& in = this->instance();
  if (rule_.psi.size() != in.costs.size()) {
    throw Error(ErrorKind::kBadParams, "leader share rule needs one table per edge");
  }
  for (size_t e = 0; e < rule_.psi.size(); ++e) {
    const auto& row = rule_.psi[e];
    if (static_cast<long>(row.size()) <= max_load()) {
      throw Error(ErrorKind::kBadParams, "leader share table shorter than the player count");
    }
    for (long l = 1; l < static_cast<long>(row.size()) && l <= in.n_max; ++l) {
      if (row[static_cast<size_t>(l)] > in.costs[e].at(l)) {
        throw Error(ErrorKind::kShareExceedsCost,
                    "psi exceeds cost on edge " + std::to_string(e) + " at load " +
                        std::to_string(l));
      }
    }
  }
}

Rat LeaderBased::psi(EdgeId edge, long load) const {
  return rule_.psi.at(static_cast<size_t>(edge)).at(static_cast<size_t>(load));
}

StaticShare::StaticShare(GameInstance instance, OptTable opt, std::vector<Rat> psi, bool spg)
    : LeaderBasedProtocol(std::move(instance)),
      opt_(std::move(opt)),
      psi_(std::move(psi)),
      spg_(spg) {
  const GameInstance& in = this->instance();
  if (psi_.size() != in.costs.size()) {
    throw Error(ErrorKind::kBadParams, "static share needs one psi value per edge");
  }
  if (opt_.max_load() < max_load()) {
    throw Error(ErrorKind::kBadParams, "OPT table shorter than the player count");
  }
  for (long l = 1; l <= opt_.max_load(); ++l) {
    for (EdgeId e : opt_.at(l)) {
      if (psi_[static_cast<size_t>(e)] > in.costs[static_cast<size_t>(e)].at(l)) {
        throw Error(ErrorKind::kShareExceedsCost,
                    "psi exceeds cost on edge " + std::to_string(e) + " at load " +
                        std::to_string(l));
      }
    }
  }
}

Rat StaticShare::psi(EdgeId edge, long load) const {
  if (opt_.contains(load, edge)) return psi_.at(static_cast<size_t>(edge));
  return cost_of(instance(), edge).at(load);
}

Rat NwaContext::eps_e(EdgeId edge, const Rat& x) const {
  return (Rat(weights.w.at(static_cast<size_t>(edge))) * big_c - x) * eps / big_c;
}

NwaContext nwa_context(const GameInstance& instance) {
  if (!instance.symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "never-walk-alone needs a symmetric instance");
  }
  if (!instance.all_finite()) {
    throw Error(ErrorKind::kInfiniteCost, "never-walk-alone needs finite costs");
  }
  Rat min_unit = Rat::infinity();
  Rat total_full(0);
  for (size_t e = 0; e < instance.costs.size(); ++e) {
    const CostTable& c = instance.costs[e];
    if (!classify(c).concave) {
      throw Error(ErrorKind::kNotConcave, "cost of edge " + std::to_string(e) + " is not concave");
    }
    min_unit = min(min_unit, c.at(1));
    total_full += c.at(instance.n_max);
  }
  if (instance.costs.empty() || min_unit.is_zero()) {
    throw Error(ErrorKind::kZeroUnitCost, "some edge has c_e(1) = 0");
  }

  NwaContext ctx;
  ctx.weights = assign_weights(instance.graph);
  const long top = horizon(instance);
  ctx.opt = opt_path_table(instance, top);
  ctx.big_c = Rat(2) * total_full + Rat(1);
  long weight_sum = std::accumulate(ctx.weights.w.begin(), ctx.weights.w.end(), 0L);
  ctx.eps = min_unit / Rat(2 * weight_sum);

  const size_t m = instance.costs.size();
  ctx.zeta.assign(m, std::vector<Rat>(static_cast<size_t>(top) + 1, Rat(0)));
  ctx.hat.assign(m, std::vector<Rat>(static_cast<size_t>(top) + 1, Rat(0)));
  for (size_t e = 0; e < m; ++e) {
    const CostTable& c = instance.costs[e];
    const EdgeId id = static_cast<EdgeId>(e);
    for (long l = 1; l <= top; ++l) {
      const Rat cl = c.at(l);
      const size_t li = static_cast<size_t>(l);
      if (l == 1) {
        ctx.zeta[e][li] = Rat(2) * cl;
        ctx.hat[e][li] = Rat(2) * cl;
      } else if (!ctx.opt.contains(l, id)) {
        ctx.zeta[e][li] = Rat(2) * cl;
        ctx.hat[e][li] = Rat(2 * (l - 1)) * cl + ctx.eps_e(id, ctx.zeta[e][li]);
      } else {
        ctx.zeta[e][li] = cl / Rat(l - 1);
        ctx.hat[e][li] = cl + ctx.eps_e(id, ctx.zeta[e][li]);
      }
    }
    ctx.eps2 += ctx.eps_e(id, Rat(0));
  }
  return ctx;
}

Nwa::Nwa(GameInstance instance) : Protocol(std::move(instance)), ctx_(nwa_context(this->instance())) {}

Rat Nwa::share(EdgeId edge, long load, long rank) const {
  const Rat& z = ctx_.zeta.at(static_cast<size_t>(edge)).at(static_cast<size_t>(load));
  if (rank == 0 && load > 1) return ctx_.eps_e(edge, z);
  return z;
}

Rat Nwa::charged_cost(EdgeId edge, long load) const {
  if (load == 0) return Rat(0);
  return ctx_.hat.at(static_cast<size_t>(edge)).at(static_cast<size_t>(load));
}

LeaderShareRule static_share_rule(const GameInstance& instance, const OptTable& opt,
                                  const std::vector<Rat>& psi) {
  if (psi.size() != instance.costs.size()) {
    throw Error(ErrorKind::kBadParams, "static share needs one psi value per edge");
  }
  LeaderShareRule rule;
  rule.psi.resize(psi.size());
  for (size_t e = 0; e < psi.size(); ++e) {
    auto& row = rule.psi[e];
    row.assign(static_cast<size_t>(opt.max_load()) + 1, Rat(0));
    for (long l = 1; l <= opt.max_load(); ++l) {
      const Rat c = instance.costs[e].at(l);
      if (opt.contains(l, static_cast<EdgeId>(e))) {
        if (psi[e] > c) {
          throw Error(ErrorKind::kShareExceedsCost,
                      "psi exceeds cost on edge " + std::to_string(e) + " at load " +
                          std::to_string(l));
        }
        row[static_cast<size_t>(l)] = psi[e];
      } else {
        row[static_cast<size_t>(l)] = c;
      }
    }
  }
  return rule;
}

SpgBuild make_spg(const GameInstance& instance, const SPTree& tree) {
  if (!instance.symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "spg protocol needs a symmetric instance");
  }
  OptTable opt = opt_path_table(instance, horizon(instance));
  SpgBuild out;
  out.annotations = annotate(tree, instance, opt);
  out.protocol = std::make_unique<StaticShare>(instance, std::move(opt),
                                               out.annotations.psi.edge, true);
  return out;
}

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, const GameInstance& instance,
                                        const std::optional<SPTree>& tree,
                                        const std::optional<std::vector<Rat>>& psi) {
  try {
    switch (kind) {
      case ProtocolKind::kEqualSplit: return std::make_unique<EqualSplit>(instance);
      case ProtocolKind::kIncremental: return std::make_unique<Incremental>(instance);
      case ProtocolKind::kLeaderBased:
      case ProtocolKind::kStaticShare: {
        if (!psi) {
          throw Error(ErrorKind::kProtocolInapplicable,
                      protocol_name(kind) + " needs per-edge psi values");
        }
        OptTable opt = opt_path_table(instance, horizon(instance));
        if (kind == ProtocolKind::kStaticShare) {
          return std::make_unique<StaticShare>(instance, std::move(opt), *psi, false);
        }
        LeaderShareRule rule = static_share_rule(instance, opt, *psi);
        return std::make_unique<LeaderBased>(instance, std::move(rule));
      }
      case ProtocolKind::kSpg: {
        if (!tree) {
          throw Error(ErrorKind::kProtocolInapplicable, "spg needs a series-parallel tree");
        }
        return std::move(make_spg(instance, *tree).protocol);
      }
      case ProtocolKind::kNwa: return std::make_unique<Nwa>(instance);
    }
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kNotSymmetric:
      case ErrorKind::kNotConcave:
      case ErrorKind::kZeroUnitCost:
      case ErrorKind::kInfiniteCost:
        throw Error(ErrorKind::kProtocolInapplicable, protocol_name(kind) + ": " + e.what());
      default:
        throw;
    }
  }
  throw Error(ErrorKind::kBadParams, "unknown protocol kind");
}

Rat ShareMatrix::player_total(size_t player) const {
  Rat sum(0);
  for (const Rat& x : xi.at(player)) sum += x;
  return sum;
}

Rat ShareMatrix::edge_total(EdgeId edge) const {
  Rat sum(0);
  for (const auto& row : xi) sum += row.at(static_cast<size_t>(edge));
  return sum;
}

ShareMatrix compute_shares(const Protocol& protocol, const StrategyProfile& profile) {
  const GameInstance& in = protocol.instance();
  const size_t m = in.costs.size();
  std::vector<std::vector<size_t>> users(m);
  for (size_t i = 0; i < profile.paths.size(); ++i) {
    for (EdgeId e : profile.paths[i]) users[static_cast<size_t>(e)].push_back(i);
  }
  ShareMatrix out;
  out.xi.assign(profile.paths.size(), std::vector<Rat>(m, Rat(0)));
  for (size_t e = 0; e < m; ++e) {
    auto& u = users[e];
    std::sort(u.begin(), u.end(),
              [&](size_t a, size_t b) { return in.players[a].id < in.players[b].id; });
    const long load = static_cast<long>(u.size());
    for (long rank = 0; rank < load; ++rank) {
      out.xi[u[static_cast<size_t>(rank)]][e] =
          protocol.share(static_cast<EdgeId>(e), load, rank);
    }
  }
  return out;
}

ShareMatrix equal_split_shares(const GameInstance& instance, const StrategyProfile& profile) {
  return compute_shares(EqualSplit(instance), profile);
}

ShareMatrix incremental_shares(const GameInstance& instance, const StrategyProfile& profile) {
  return compute_shares(Incremental(instance), profile);
}

ShareMatrix leader_based_shares(const GameInstance& instance, const StrategyProfile& profile,
                                const LeaderShareRule& rule) {
  return compute_shares(LeaderBased(instance, rule), profile);
}

ShareMatrix spg_protocol_shares(const GameInstance& instance, const StrategyProfile& profile,
                                const SPAnnotations& annotations, const OptTable& opt) {
  return compute_shares(StaticShare(instance, opt, annotations.psi.edge, true), profile);
}

ShareMatrix nwa_shares(const Nwa& protocol, const StrategyProfile& profile) {
  return compute_shares(protocol, profile);
}

}  // namespace netshare
