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

#include "netshare/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "netshare/error.hpp"

namespace netshare {

namespace {

using Index = std::vector<std::uint32_t>;

constexpr double kRelTol = 1e-9;

// Doubles decide only when they are clearly apart; everything else goes to
// exact arithmetic.
bool undecided(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return true;
  return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

int compare(const Rat& a, const Rat& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

struct Chunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

std::vector<Chunk> split(std::uint64_t total, int threads) {
  const std::uint64_t parts = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(threads));
  std::vector<Chunk> out;
  std::uint64_t step = (total + parts - 1) / parts;
  if (step == 0) step = 1;
  for (std::uint64_t b = 0; b < total; b += step) out.push_back({b, std::min(total, b + step)});
  if (out.empty()) out.push_back({0, 0});
  return out;
}

// Runs fn(chunk_index) for every chunk, on up to `threads` threads.
template <typename Fn>
void run_chunks(std::size_t chunks, int threads, Fn fn) {
  if (threads <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(fn, c);
  for (auto& t : pool) t.join();
}

// Mixed-radix counter over per-player strategy indices, player 0 most
// significant, so increasing order is lexicographic profile order.
Index decode(std::uint64_t at, const std::vector<std::uint32_t>& radix) {
  Index idx(radix.size(), 0);
  for (std::size_t i = radix.size(); i-- > 0;) {
    idx[i] = static_cast<std::uint32_t>(at % radix[i]);
    at /= radix[i];
  }
  return idx;
}

void advance(Index& idx, const std::vector<std::uint32_t>& radix) {
  for (std::size_t i = radix.size(); i-- > 0;) {
    if (++idx[i] < radix[i]) return;
    idx[i] = 0;
  }
}

std::vector<std::uint32_t> radix_of(const StrategySpace& space) {
  std::vector<std::uint32_t> r;
  for (const auto& p : space.paths) r.push_back(static_cast<std::uint32_t>(p.size()));
  return r;
}

Index to_index(const StrategySpace& space, const StrategyProfile& profile) {
  if (profile.paths.size() != space.paths.size()) {
    throw Error(ErrorKind::kBadParams, "profile has the wrong number of players");
  }
  Index idx(profile.paths.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& set = space.paths[i];
    auto it = std::lower_bound(set.begin(), set.end(), profile.paths[i]);
    if (it == set.end() || *it != profile.paths[i]) {
      throw Error(ErrorKind::kBadParams, "player " + std::to_string(i) + " path is not a strategy");
    }
    idx[i] = static_cast<std::uint32_t>(it - set.begin());
  }
  return idx;
}

StrategyProfile to_profile(const StrategySpace& space, const Index& idx) {
  StrategyProfile p;
  p.paths.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) p.paths.push_back(space.paths[i][idx[i]]);
  return p;
}

// Shares and charged costs cached per (edge, load, rank) for loads up to the
// number of players, plus a double shadow for fast comparisons.
class Evaluator {
 public:
  Evaluator(const Protocol& protocol, StrategySpace space)
      : space_(std::move(space)),
        certify_(protocol.certifies_ties()),
        n_(static_cast<long>(space_.paths.size())),
        m_(protocol.instance().graph.num_edges()) {
    const GameInstance& in = protocol.instance();
    if (n_ > 64) throw Error(ErrorKind::kBadParams, "at most 64 players are supported");
    std::vector<std::size_t> order(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return in.players[a].id < in.players[b].id; });
    by_priority_ = order;
    bit_.assign(order.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) bit_[order[k]] = static_cast<int>(k);

    const std::size_t cells = static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_ + 1) *
                              static_cast<std::size_t>(std::max<long>(n_, 1));
    share_.assign(cells, Rat(0));
    share_d_.assign(cells, 0.0);
    charged_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_ + 1), Rat(0));
    for (EdgeId e = 0; e < m_; ++e) {
      for (long l = 1; l <= n_; ++l) {
        charged_[cidx(e, l)] = protocol.charged_cost(e, l);
        for (long r = 0; r < l; ++r) {
          share_[sidx(e, l, r)] = protocol.share(e, l, r);
          share_d_[sidx(e, l, r)] = share_[sidx(e, l, r)].to_double();
        }
      }
    }
  }

  const StrategySpace& space() const { return space_; }

  struct Scratch {
    std::vector<std::uint64_t> mask;
    std::vector<long> load;
    std::vector<char> on_cur;
  };

  Scratch scratch() const {
    Scratch s;
    s.mask.assign(static_cast<std::size_t>(m_), 0);
    s.load.assign(static_cast<std::size_t>(m_), 0);
    s.on_cur.assign(static_cast<std::size_t>(m_), 0);
    return s;
  }

  void load(const Index& idx, Scratch& s) const {
    std::fill(s.mask.begin(), s.mask.end(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const std::uint64_t b = std::uint64_t{1} << bit_[i];
      for (EdgeId e : space_.paths[i][idx[i]]) s.mask[static_cast<std::size_t>(e)] |= b;
    }
    for (std::size_t e = 0; e < s.mask.size(); ++e) s.load[e] = std::popcount(s.mask[e]);
  }

  Rat charged_cost(const Scratch& s) const {
    Rat sum(0);
    for (EdgeId e = 0; e < m_; ++e) {
      const long l = s.load[static_cast<std::size_t>(e)];
      if (l > 0) sum += charged_[cidx(e, l)];
    }
    return sum;
  }

  // Scans deviations; see is_nash. need_witness asks for the best deviation
  // of the first improving player, otherwise the scan may stop early.
  NashResult check(const Index& idx, Scratch& s, bool need_witness) const {
    load(idx, s);
    NashResult res;
    for (std::size_t pos : by_priority_) {
      const std::uint64_t low = (std::uint64_t{1} << bit_[pos]) - 1;
      const auto& options = space_.paths[pos];
      const Path& cur = options[idx[pos]];
      for (EdgeId e : cur) s.on_cur[static_cast<std::size_t>(e)] = 1;

      auto term = [&](EdgeId e) {
        const std::size_t u = static_cast<std::size_t>(e);
        const long rank = std::popcount(s.mask[u] & low);
        return s.on_cur[u] ? sidx(e, s.load[u], rank) : sidx(e, s.load[u] + 1, rank);
      };
      auto sum_d = [&](const Path& p) {
        double v = 0;
        for (EdgeId e : p) v += share_d_[term(e)];
        return v;
      };
      auto sum_x = [&](const Path& p) {
        Rat v(0);
        for (EdgeId e : p) v += share_[term(e)];
        return v;
      };

      const double cur_d = sum_d(cur);
      std::optional<Rat> cur_x;
      auto cur_exact = [&]() -> const Rat& {
        if (!cur_x) cur_x = sum_x(cur);
        return *cur_x;
      };

      std::optional<std::size_t> best;
      double best_d = 0;
      std::optional<Rat> best_x;
      bool stop = false;
      for (std::size_t q = 0; q < options.size(); ++q) {
        if (q == idx[pos]) continue;
        const double dev_d = sum_d(options[q]);
        std::optional<Rat> dev_x;
        int cmp;
        if (undecided(dev_d, cur_d)) {
          dev_x = sum_x(options[q]);
          cmp = compare(*dev_x, cur_exact());
        } else {
          cmp = dev_d < cur_d ? -1 : 1;
        }
        if (cmp == 0 && certify_) ++res.tie_hits;
        if (cmp >= 0) continue;
        res.is_nash = false;
        if (res.witness || !need_witness) {
          if (!certify_) {
            stop = true;
            break;
          }
          continue;
        }
        bool better = !best;
        if (best) {
          if (undecided(dev_d, best_d)) {
            if (!dev_x) dev_x = sum_x(options[q]);
            if (!best_x) best_x = sum_x(options[*best]);
            better = *dev_x < *best_x;
          } else {
            better = dev_d < best_d;
          }
        }
        if (better) {
          best = q;
          best_d = dev_d;
          best_x = dev_x;
        }
      }
      if (best && !res.witness) {
        NashWitness w;
        w.position = pos;
        w.from = cur;
        w.to = options[*best];
        w.old_total = cur_exact();
        w.new_total = best_x ? *best_x : sum_x(options[*best]);
        res.witness = std::move(w);
        if (!certify_) stop = true;
      }
      for (EdgeId e : cur) s.on_cur[static_cast<std::size_t>(e)] = 0;
      if (stop) break;
    }
    return res;
  }

 private:
  std::size_t sidx(EdgeId e, long load, long rank) const {
    return (static_cast<std::size_t>(e) * static_cast<std::size_t>(n_ + 1) +
            static_cast<std::size_t>(load)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(rank);
  }
  std::size_t cidx(EdgeId e, long load) const {
    return static_cast<std::size_t>(e) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(load);
  }

  StrategySpace space_;
  bool certify_;
  long n_;
  int m_;
  std::vector<std::size_t> by_priority_;
  std::vector<int> bit_;
  std::vector<Rat> share_;
  std::vector<double> share_d_;
  std::vector<Rat> charged_;
};

}  // namespace

std::uint64_t StrategySpace::profile_count(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (const auto& p : paths) {
    if (p.empty()) return 0;
    if (total > cap / p.size()) {
      throw Error(ErrorKind::kPathExplosion,
                  "profile space exceeds the cap of " + std::to_string(cap));
    }
    total *= p.size();
  }
  if (total > cap) {
    throw Error(ErrorKind::kPathExplosion, "profile space exceeds the cap of " + std::to_string(cap));
  }
  return total;
}

StrategySpace strategy_space(const GameInstance& instance, std::size_t max_paths) {
  StrategySpace space;
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> memo;
  for (const Player& p : instance.players) {
    auto key = std::make_pair(p.source, p.sink);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, enumerate_paths(instance.graph, p.source, p.sink, max_paths)).first;
    }
    space.paths.push_back(it->second);
  }
  return space;
}

NashResult is_nash(const Protocol& protocol, const StrategyProfile& profile,
                   std::size_t max_paths) {
  check_profile(protocol.instance(), profile);
  Evaluator ev(protocol, strategy_space(protocol.instance(), max_paths));
  auto s = ev.scratch();
  NashResult r = ev.check(to_index(ev.space(), profile), s, true);
  if (r.witness) r.witness->player = protocol.instance().players[r.witness->position].id;
  return r;
}

PneResult enumerate_pne(const Protocol& protocol, const EnumerationOptions& options) {
  Evaluator ev(protocol, strategy_space(protocol.instance(), options.max_paths));
  const std::uint64_t total = ev.space().profile_count(options.max_profiles);
  const auto radix = radix_of(ev.space());
  const auto chunks = split(total, options.threads);

  struct Partial {
    std::vector<Index> found;
    long ties = 0;
    std::uint64_t scanned = 0;
  };
  std::vector<Partial> parts(chunks.size());
  run_chunks(chunks.size(), options.threads, [&](std::size_t c) {
    Partial& out = parts[c];
    auto s = ev.scratch();
    if (chunks[c].begin >= chunks[c].end) return;
    Index idx = decode(chunks[c].begin, radix);
    for (std::uint64_t at = chunks[c].begin; at < chunks[c].end; ++at) {
      NashResult r = ev.check(idx, s, false);
      out.ties += r.tie_hits;
      if (r.is_nash) out.found.push_back(idx);
      ++out.scanned;
      advance(idx, radix);
    }
  });

  PneResult res;
  for (const Partial& p : parts) {
    for (const Index& idx : p.found) res.pne.push_back(to_profile(ev.space(), idx));
    res.tie_hits += p.ties;
    res.profiles_scanned += p.scanned;
  }
  return res;
}

OptimumResult brute_force_optimum(const GameInstance& instance, const EnumerationOptions& options) {
  const StrategySpace space = strategy_space(instance, options.max_paths);
  const std::uint64_t total = space.profile_count(options.max_profiles);
  if (total == 0) throw Error(ErrorKind::kUnreachable, "some player has no path");
  const auto radix = radix_of(space);
  const long n = static_cast<long>(instance.players.size());
  const std::size_t m = instance.costs.size();

  std::vector<std::vector<Rat>> cx(m);
  std::vector<std::vector<double>> cd(m);
  for (std::size_t e = 0; e < m; ++e) {
    for (long l = 0; l <= n; ++l) {
      cx[e].push_back(instance.costs[e].at(l));
      cd[e].push_back(cx[e].back().to_double());
    }
  }

  struct Best {
    std::optional<Index> idx;
    Rat cost;
    double cost_d = 0;
  };
  const auto chunks = split(total, options.threads);
  std::vector<Best> parts(chunks.size());
  run_chunks(chunks.size(), options.threads, [&](std::size_t c) {
    Best& best = parts[c];
    if (chunks[c].begin >= chunks[c].end) return;
    std::vector<long> load(m, 0);
    Index idx = decode(chunks[c].begin, radix);
    auto exact = [&]() {
      Rat v(0);
      for (std::size_t e = 0; e < m; ++e) v += cx[e][static_cast<std::size_t>(load[e])];
      return v;
    };
    for (std::uint64_t at = chunks[c].begin; at < chunks[c].end; ++at) {
      std::fill(load.begin(), load.end(), 0);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (EdgeId e : space.paths[i][idx[i]]) ++load[static_cast<std::size_t>(e)];
      }
      double d = 0;
      for (std::size_t e = 0; e < m; ++e) d += cd[e][static_cast<std::size_t>(load[e])];
      bool take = false;
      if (!best.idx) {
        take = true;
      } else if (undecided(d, best.cost_d)) {
        Rat v = exact();
        if (v < best.cost) {
          best.idx = idx;
          best.cost = std::move(v);
          best.cost_d = d;
        }
      } else {
        take = d < best.cost_d;
      }
      if (take) {
        best.idx = idx;
        best.cost = exact();
        best.cost_d = d;
      }
      advance(idx, radix);
    }
  });

  const Best* winner = nullptr;
  for (const Best& b : parts) {
    if (!b.idx) continue;
    if (!winner || b.cost < winner->cost) winner = &b;
  }
  return {to_profile(space, *winner->idx), winner->cost};
}

BrdResult best_response_dynamics(const Protocol& protocol, StrategyProfile start, long max_iters,
                                 std::size_t max_paths) {
  check_profile(protocol.instance(), start);
  Evaluator ev(protocol, strategy_space(protocol.instance(), max_paths));
  auto s = ev.scratch();
  Index idx = to_index(ev.space(), start);
  std::set<Index> seen{idx};
  BrdResult res;
  for (long it = 0; it <= max_iters; ++it) {
    NashResult r = ev.check(idx, s, true);
    res.tie_hits += r.tie_hits;
    if (r.is_nash) {
      res.converged = true;
      break;
    }
    if (it == max_iters) break;
    NashWitness w = std::move(*r.witness);
    w.player = protocol.instance().players[w.position].id;
    const auto& options = ev.space().paths[w.position];
    idx[w.position] =
        static_cast<std::uint32_t>(std::lower_bound(options.begin(), options.end(), w.to) -
                                   options.begin());
    res.trace.push_back(std::move(w));
    if (!seen.insert(idx).second) {
      res.cycled = true;
      break;
    }
  }
  res.profile = to_profile(ev.space(), idx);
  return res;
}

Rat charged_profile_cost(const Protocol& protocol, const StrategyProfile& profile) {
  const LoadVector loads = load_vector(protocol.instance().graph, profile);
  Rat sum(0);
  for (std::size_t e = 0; e < loads.size(); ++e) {
    if (loads[e] > 0) sum += protocol.charged_cost(static_cast<EdgeId>(e), loads[e]);
  }
  return sum;
}

Rat perturbation_total(const GameInstance& original, const GameInstance& perturbed) {
  if (original.costs.size() != perturbed.costs.size()) {
    throw Error(ErrorKind::kBadParams, "instances have different edge sets");
  }
  Rat total(0);
  for (std::size_t e = 0; e < original.costs.size(); ++e) {
    Rat worst(0);
    for (long l = 1; l <= original.n_max; ++l) {
      worst = max(worst, perturbed.costs[e].at(l) - original.costs[e].at(l));
    }
    total += worst;
  }
  return total;
}

AnalysisReport poa_report(const Protocol& protocol, const EnumerationOptions& options,
                          const GameInstance* original) {
  AnalysisReport rep;
  rep.protocol = protocol.kind();
  rep.overcharged = protocol.overcharges();
  PneResult pne = enumerate_pne(protocol, options);
  rep.pne = std::move(pne.pne);
  rep.tie_detector_hits = pne.tie_hits;
  rep.profiles_scanned = pne.profiles_scanned;
  for (const StrategyProfile& s : rep.pne) {
    Rat c = charged_profile_cost(protocol, s);
    if (!rep.worst_eq_cost || c > *rep.worst_eq_cost) rep.worst_eq_cost = c;
    if (!rep.best_eq_cost || c < *rep.best_eq_cost) rep.best_eq_cost = c;
  }
  const GameInstance& base = original ? *original : protocol.instance();
  OptimumResult opt = brute_force_optimum(base, options);
  rep.opt_cost = opt.cost;
  rep.opt_profile = std::move(opt.profile);
  if (rep.worst_eq_cost) {
    const Rat& w = *rep.worst_eq_cost;
    if (w.is_inf() || (rep.opt_cost.is_zero() && !w.is_zero())) {
      rep.poa = Rat::infinity();
    } else if (rep.opt_cost.is_zero()) {
      rep.poa = Rat(1);
    } else if (rep.opt_cost.is_inf()) {
      rep.poa = Rat(1);
    } else {
      rep.poa = w / rep.opt_cost;
    }
  }
  if (const auto* nwa = dynamic_cast<const Nwa*>(&protocol)) {
    EpsAccounting acc;
    acc.eps2 = nwa->context().eps2;
    const auto& record = protocol.instance().perturbation;
    if (original) {
      acc.eps1 = perturbation_total(*original, protocol.instance());
    } else {
      acc.eps1 = record ? record->total_increment : Rat(0);
    }
    rep.eps = acc;
  }
  return rep;
}

}  // namespace netshare
