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

#include "netshare/cost.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "netshare/error.hpp"

namespace netshare {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kMalformedTable, what);
}

}  // namespace

CostTable::CostTable(long n_max, std::vector<Run> runs) : n_max_(n_max) {
  if (n_max_ < 1) malformed("n_max must be at least 1");
  for (Run& run : runs) {
    if (run.count <= 0) continue;
    if (run.marginal.is_inf()) malformed("infinite marginal inside a run");
    if (run.marginal.sign() < 0) malformed("cost decreases with load");
    if (!runs_.empty() && runs_.back().marginal == run.marginal) {
      runs_.back().count += run.count;
    } else {
      runs_.push_back(std::move(run));
    }
  }
  long covered = 0;
  Rat base(0);
  for (const Run& run : runs_) {
    starts_.push_back(covered + 1);
    bases_.push_back(base);
    covered += run.count;
    base += run.marginal * Rat(run.count);
  }
  if (covered > n_max_) malformed("runs cover more than n_max loads");
  capacity_ = covered;
}

CostTable CostTable::from_values(const std::vector<Rat>& values) {
  if (values.size() < 2) malformed("a cost table needs c(0) and c(1)");
  if (values[0] != Rat(0)) malformed("c(0) must be 0");
  std::vector<Run> runs;
  long n_max = static_cast<long>(values.size()) - 1;
  for (long l = 1; l <= n_max; ++l) {
    const Rat& cur = values[static_cast<size_t>(l)];
    const Rat& prev = values[static_cast<size_t>(l - 1)];
    if (cur.is_inf()) {
      for (long k = l + 1; k <= n_max; ++k) {
        if (!values[static_cast<size_t>(k)].is_inf()) malformed("finite cost after inf");
      }
      break;
    }
    if (cur < prev) malformed("cost decreases at load " + std::to_string(l));
    runs.push_back({1, cur - prev});
  }
  return CostTable(n_max, std::move(runs));
}

CostTable CostTable::from_runs(long n_max, std::vector<Run> runs) {
  return CostTable(n_max, std::move(runs));
}

CostTable CostTable::constant(long n_max, const Rat& value) {
  return capacitated_constant(n_max, value, n_max);
}

CostTable CostTable::capacitated_constant(long n_max, const Rat& value, long capacity) {
  if (value.is_inf() || value.sign() < 0) malformed("constant cost must be finite and >= 0");
  capacity = std::clamp(capacity, 0L, n_max);
  std::vector<Run> runs;
  if (capacity >= 1) runs.push_back({1, value});
  if (capacity >= 2) runs.push_back({capacity - 1, Rat(0)});
  return CostTable(n_max, std::move(runs));
}

Rat CostTable::at(long load) const {
  if (load < 0 || load > n_max_) {
    throw Error(ErrorKind::kBadParams, "load " + std::to_string(load) + " outside 0..n_max");
  }
  if (load == 0) return Rat(0);
  if (load > capacity_) return Rat::infinity();
  auto it = std::upper_bound(starts_.begin(), starts_.end(), load);
  size_t idx = static_cast<size_t>(it - starts_.begin()) - 1;
  return bases_[idx] + runs_[idx].marginal * Rat(load - starts_[idx] + 1);
}

Rat CostTable::marginal(long load) const {
  if (load < 1 || load > n_max_) {
    throw Error(ErrorKind::kBadParams, "marginal load outside 1..n_max");
  }
  if (load > capacity_) return Rat::infinity();
  auto it = std::upper_bound(starts_.begin(), starts_.end(), load);
  return runs_[static_cast<size_t>(it - starts_.begin()) - 1].marginal;
}

std::vector<Rat> CostTable::values() const {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(n_max_) + 1);
  Rat acc(0);
  out.push_back(acc);
  for (const Run& run : runs_) {
    for (long k = 0; k < run.count; ++k) {
      acc += run.marginal;
      out.push_back(acc);
    }
  }
  while (static_cast<long>(out.size()) <= n_max_) out.push_back(Rat::infinity());
  return out;
}

CostShape classify(const CostTable& cost) {
  CostShape shape;
  if (!cost.all_finite()) {
    shape.capacitated = true;
    return shape;
  }
  const auto& runs = cost.runs();
  shape.concave = true;
  shape.convex = true;
  shape.strictly_concave = true;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].count > 1) shape.strictly_concave = false;
    if (i == 0) continue;
    // Adjacent runs always differ in marginal.
    if (runs[i].marginal > runs[i - 1].marginal) {
      shape.concave = false;
      shape.strictly_concave = false;
    } else {
      shape.convex = false;
    }
  }
  // Every load past the first adds nothing.
  shape.constant = true;
  long load = 1;
  for (const auto& run : runs) {
    long last = load + run.count - 1;
    if (last >= 2 && !run.marginal.is_zero()) shape.constant = false;
    load = last + 1;
  }
  return shape;
}

bool GameInstance::symmetric() const {
  return std::all_of(players.begin(), players.end(), [&](const Player& p) {
    return p.source == players.front().source && p.sink == players.front().sink;
  });
}

bool GameInstance::multicast() const {
  return std::all_of(players.begin(), players.end(),
                     [&](const Player& p) { return p.sink == players.front().sink; });
}

bool GameInstance::all_finite() const {
  return std::all_of(costs.begin(), costs.end(),
                     [](const CostTable& c) { return c.all_finite(); });
}

void GameInstance::validate() const {
  topo_sort(graph);
  if (static_cast<int>(costs.size()) != graph.num_edges()) {
    throw Error(ErrorKind::kBadParams, "one cost table per edge required");
  }
  for (const CostTable& c : costs) {
    if (c.n_max() != n_max) throw Error(ErrorKind::kBadParams, "cost table n_max mismatch");
  }
  if (players.empty() || static_cast<long>(players.size()) > n_max) {
    throw Error(ErrorKind::kBadParams, "need 1 <= players <= n_max");
  }
  std::set<int> ids;
  for (const Player& p : players) {
    if (p.id < 0 || !ids.insert(p.id).second) {
      throw Error(ErrorKind::kBadParams, "player ids must be distinct and non-negative");
    }
    if (!graph.has_vertex(p.source) || !graph.has_vertex(p.sink)) {
      throw Error(ErrorKind::kBadParams, "player terminal is not a vertex");
    }
    if (!reachable_from(graph, p.source)[static_cast<size_t>(p.sink)]) {
      throw Error(ErrorKind::kUnreachable,
                  "player " + std::to_string(p.id) + " cannot reach its sink");
    }
  }
}

GameInstance GameInstance::with_players(const std::vector<int>& positions) const {
  GameInstance out = *this;
  out.players.clear();
  for (int pos : positions) out.players.push_back(players.at(static_cast<size_t>(pos)));
  return out;
}

GameInstance GameInstance::with_player_count(int count) const {
  std::vector<int> positions(static_cast<size_t>(count));
  std::iota(positions.begin(), positions.end(), 0);
  return with_players(positions);
}

GameInstance perturb_for_ties(const GameInstance& instance, long r) {
  if (r < 0) throw Error(ErrorKind::kBadParams, "r must be non-negative");
  if (!instance.all_finite()) {
    throw Error(ErrorKind::kInfiniteCost, "cannot perturb an instance with +inf costs");
  }
  mpz_class k = 1;
  for (long i = 2; i <= instance.n_max - 1; ++i) {
    mpz_lcm_ui(k.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(i));
  }
  mpz_class span = 2 * k * instance.n_max;
  long window = static_cast<long>(span.get_str().size()) + 1;
  // Windows must also hold 2K^2 so that a window sum can never equal a
  // non-zero multiple of 10^-r / K; only matters once n_max >= 8.
  mpz_class reach = 2 * k * k + 1;
  window = std::max(window, static_cast<long>(reach.get_str().size()));

  const Rat grid = Rat::pow10(-r);
  const Rat scale = Rat::pow10(r);
  GameInstance out = instance;
  Rat total(0);
  for (EdgeId e = 0; e < instance.graph.num_edges(); ++e) {
    const long index = e + 1;
    const Rat increment = Rat(k) * Rat::pow10(-(r + window * index));
    std::vector<Rat> values = instance.costs[static_cast<size_t>(e)].values();
    Rat largest(0);
    for (size_t l = 1; l < values.size(); ++l) {
      Rat bumped = Rat((values[l] * scale).ceil()) * grid + increment;
      largest = max(largest, bumped - values[l]);
      values[l] = std::move(bumped);
    }
    total += largest;
    out.costs[static_cast<size_t>(e)] = CostTable::from_values(values);
  }
  out.perturbation = PerturbationRecord{r, k, window, total};
  return out;
}

CostTable strictify_concave(const CostTable& cost, const Rat& eps) {
  if (eps.is_inf() || eps.sign() <= 0) throw Error(ErrorKind::kInvalidEps, "eps must be > 0");
  if (!classify(cost).concave) throw Error(ErrorKind::kNotConcave, "table is not concave");
  const Rat unit = cost.at(1);
  if (unit.is_zero()) throw Error(ErrorKind::kZeroUnitCost, "c(1) = 0 admits no strict form");
  std::vector<Rat> values = cost.values();
  const Rat lift = eps * unit;
  Rat half_power(1);
  for (size_t l = 1; l < values.size(); ++l) {
    half_power /= Rat(2);
    values[l] += lift * (Rat(1) - half_power);
  }
  return CostTable::from_values(values);
}

}  // namespace netshare
