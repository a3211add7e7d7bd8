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
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "netshare/cost.hpp"
#include "netshare/generators.hpp"
#include "netshare/graph.hpp"
#include "netshare/profile.hpp"

namespace netshare {
namespace {

using testing::error_kind;
using testing::make_instance;
using testing::R;
using testing::table;

TEST_CASE("classify examples") {
  const CostShape linear = classify(table({0, 1, 2, 3}));
  CHECK(linear.concave);
  CHECK(linear.convex);
  CHECK_FALSE(linear.strictly_concave);
  CHECK_FALSE(linear.constant);

  const CostShape step = classify(table({0, 2, 2, 2}));
  CHECK(step.concave);
  CHECK_FALSE(step.convex);
  CHECK(step.constant);

  const CostShape square = classify(table({0, 1, 4, 9}));
  CHECK(square.convex);
  CHECK_FALSE(square.concave);

  const CostShape strict = classify(table({0, 3, 5, 6}));
  CHECK(strict.strictly_concave);
  CHECK(strict.concave);
}

TEST_CASE("capacitated tables are neither concave nor convex") {
  const CostShape cap = classify(CostTable::capacitated_constant(3, Rat(1), 1));
  CHECK(cap.capacitated);
  CHECK_FALSE(cap.concave);
  CHECK_FALSE(cap.convex);
}

TEST_CASE("malformed tables") {
  CHECK(error_kind([] { table({1, 2}); }) == ErrorKind::kMalformedTable);
  CHECK(error_kind([] { table({0, 2, 1}); }) == ErrorKind::kMalformedTable);
}

TEST_CASE("runs and dense tables agree") {
  const CostTable dense = table({0, 3, 5, 6, 7, 8});
  const CostTable runs = CostTable::from_runs(5, {{1, Rat(3)}, {1, Rat(2)}, {3, Rat(1)}});
  CHECK(dense == runs);
  CHECK(runs.values() == dense.values());
  CHECK(runs.at(4) == Rat(7));
  CHECK(runs.marginal(2) == Rat(2));

  const CostTable capped = CostTable::from_runs(4, {{2, Rat(1)}});
  CHECK(capped.capacity() == 2);
  CHECK(capped.at(3).is_inf());
}

TEST_CASE("perturb_for_ties example") {
  const GameInstance in =
      make_instance(2, {{0, 0, 1}}, {table({"0", "0.1234", "0.2"})}, 1, 0, 1);
  const GameInstance p = perturb_for_ties(in, 3);
  REQUIRE(p.perturbation.has_value());
  CHECK(p.perturbation->k == 1);
  CHECK(p.perturbation->window == 2);
  CHECK(p.costs[0].at(1) == R("0.12401"));
  CHECK(p.costs[0].at(2) == R("0.20001"));
  CHECK(p.costs[0].at(0) == Rat(0));
}

TEST_CASE("perturb_for_ties separates equal tables") {
  const GameInstance in = make_instance(2, {{0, 0, 1}, {1, 0, 1}},
                                        {table({0, 2, 3, 4}), table({0, 2, 3, 4})}, 2, 0, 1);
  const GameInstance p = perturb_for_ties(in, 3);
  for (long l = 1; l <= 3; ++l) CHECK(p.costs[0].at(l) != p.costs[1].at(l));
  CHECK(p.perturbation->total_increment <= Rat(2) * Rat::pow10(-3));
}

TEST_CASE("perturb_for_ties rejects infinite costs") {
  const GameInstance in = make_instance(
      2, {{0, 0, 1}}, {CostTable::capacitated_constant(2, Rat(1), 1)}, 1, 0, 1);
  CHECK(error_kind([&] { perturb_for_ties(in, 3); }) == ErrorKind::kInfiniteCost);
}

// zeta_e(l) from its definition: 2 c_e(l) when l = 1 or e is off OPT(l),
// c_e(l) / (l - 1) otherwise.
std::vector<std::vector<Rat>> zeta_kernel(const GameInstance& in) {
  const OptTable opt = opt_path_table(in);
  std::vector<std::vector<Rat>> zeta(static_cast<size_t>(in.graph.num_edges()));
  for (EdgeId e = 0; e < in.graph.num_edges(); ++e) {
    auto& z = zeta[static_cast<size_t>(e)];
    z.resize(static_cast<size_t>(in.n_max) + 1);
    for (long l = 1; l <= in.n_max; ++l) {
      const Rat c = in.costs[static_cast<size_t>(e)].at(l);
      z[static_cast<size_t>(l)] = (l == 1 || !opt.contains(l, e)) ? Rat(2) * c : c / Rat(l - 1);
    }
  }
  return zeta;
}

TEST_CASE("perturbed zeta sums never tie across distinct paths") {
  const char* shapes[] = {"concave", "convex", "strictly-concave"};
  for (int i = 0; i < 50; ++i) {
    GenParams params = testing::random_params("random-dag", shapes[i % 3], 900 + i);
    params.max_vertices = 5;
    params.max_edges = 8;
    params.n_max = 2 + i % 4;
    params.players = 1;
    const GameInstance in = perturb_for_ties(generate(params).instance, 3);
    const auto zeta = zeta_kernel(in);
    const Graph& g = in.graph;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (u == v) continue;
        std::map<Rat, size_t> owner;
        const std::vector<Path> paths = enumerate_paths(g, u, v);
        for (size_t p = 0; p < paths.size(); ++p) {
          std::set<Rat> sums{Rat(0)};
          for (EdgeId e : paths[p]) {
            std::set<Rat> next;
            for (const Rat& s : sums) {
              for (long l = 1; l <= in.n_max; ++l) {
                next.insert(s + zeta[static_cast<size_t>(e)][static_cast<size_t>(l)]);
              }
            }
            sums = std::move(next);
          }
          for (const Rat& s : sums) {
            auto [it, fresh] = owner.emplace(s, p);
            if (!fresh) {
              CHECK_MESSAGE(it->second == p, "tie on instance " << i << " between "
                                                                << u << " and " << v);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("perturb_for_ties widens the window for large n_max") {
  // K = lcm(1..7) = 420; 2K^2 + 1 = 352801 needs six digits.
  const GameInstance in = make_instance(
      2, {{0, 0, 1}}, {CostTable::constant(8, Rat(1))}, 1, 0, 1);
  const GameInstance p = perturb_for_ties(in, 2);
  CHECK(p.perturbation->k == 420);
  CHECK(p.perturbation->window == 6);
}

TEST_CASE("strictify_concave examples") {
  const CostTable linear = strictify_concave(table({0, 1, 2}), R("1/10"));
  CHECK(classify(linear).strictly_concave);
  const CostTable step = strictify_concave(table({0, 2, 2}), R("1/10"));
  CHECK(classify(step).strictly_concave);
  CHECK(error_kind([] { strictify_concave(table({0, 1, 2}), Rat(0)); }) ==
        ErrorKind::kInvalidEps);
  CHECK(error_kind([] { strictify_concave(table({0, 1, 4}), R("1/10")); }) ==
        ErrorKind::kNotConcave);
  CHECK(error_kind([] { strictify_concave(table({"0", "0", "0"}), R("1/10")); }) ==
        ErrorKind::kZeroUnitCost);
}

// Concave table from non-increasing random marginals.
CostTable random_concave(std::mt19937_64& rng, long n_max) {
  std::vector<long> marginals;
  for (long l = 0; l < n_max; ++l) marginals.push_back(1 + static_cast<long>(rng() % 9));
  std::sort(marginals.rbegin(), marginals.rend());
  std::vector<Rat> values{Rat(0)};
  for (long m : marginals) values.push_back(values.back() + Rat(m, 3));
  return CostTable::from_values(values);
}

TEST_CASE("strictify_concave post-condition on random tables") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const long n_max = 1 + i % 8;
    const CostTable c = random_concave(rng, n_max);
    const Rat eps(1, 1 + static_cast<long>(rng() % 50));
    const CostTable s = strictify_concave(c, eps);
    CHECK(classify(s).strictly_concave);
    for (long l = 1; l <= n_max; ++l) {
      CHECK(c.at(l) <= s.at(l));
      CHECK(s.at(l) <= (Rat(1) + eps) * c.at(l));
    }
  }
}

TEST_CASE("classify is invariant under positive scaling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const long n_max = 1 + i % 6;
    std::vector<Rat> values{Rat(0)};
    for (long l = 1; l <= n_max; ++l) values.push_back(values.back() + Rat(static_cast<long>(rng() % 5)));
    const CostTable c = CostTable::from_values(values);
    const Rat factor(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 20));
    std::vector<Rat> scaled;
    for (const Rat& v : values) scaled.push_back(v * factor);
    CHECK(classify(CostTable::from_values(scaled)) == classify(c));
  }
}

}  // namespace
}  // namespace netshare
