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

#ifndef NETSHARE_GENERATORS_HPP_
#define NETSHARE_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netshare/cost.hpp"
#include "netshare/rational.hpp"
#include "netshare/sp_tree.hpp"

namespace netshare {

// Rational q with |q - sqrt(n)| < 10^-digits (exact when n is a square).
Rat sqrt_approx(long n, int digits);

// Sources s_i = 0..n-1, hub v = n, sink t = n+1. Edge 2i is (s_i, t) with
// constant cost 1, edge 2i+1 is (s_i, v) with cost 0, edge 2n is (v, t) with
// constant cost c. Player i routes s_i -> t.
GameInstance gen_multicast_const_lb(long n, const Rat& c);

// Zig-zag ladder: s = 0, v_i = i, u_i = n+i (i = 1..n), t = 2n+1. Edge 0 is
// (s, t) with cost 1; then for each i: (s, v_i) cost 0, (v_i, u_i) cost 1,
// (u_i, t) cost 0, and for i >= 2 (v_i, u_{i-1}) cost 0. Every edge costs
// +inf at load >= 2. `players` symmetric players (default n+1).
GameInstance gen_dag_convex_lb(long n, long players = 0);

// Braess graph s = 0, u = 1, v = 2, t = 3. Edges: 0 (s,t) cost 1, 1 (s,v)
// cost q, 2 (s,u) cost 0, 3 (u,v) cost 0, 4 (u,t) cost q, 5 (v,t) cost 0,
// all +inf at load >= 2, with q within 10^-digits of (sqrt(33)-1)/8.
// Metadata key "q" holds q. Throws kBadParams if digits < 6.
GameInstance gen_overcharge_lb(int digits, long players = 3);
Rat overcharge_q(const GameInstance& instance);

// s = 0, v = 1, u = 2, t = 3. Edge 0 (s,v) cost min(l, k), edge 1 (v,u) cost
// 0, edge 2 (u,t) cost 2k, edge 3 (v,t) cost l, and edges 3+j (s,u) with
// c_j(l) = l/(j k^2) + H_{j-1}/k + j 10^-(2k+4) for j = 1..2^k.
// n_max = 4^k k^2. Throws kKTooSmall for k < 6, kBadParams for k > 10.
GameInstance gen_static_share_lb(long k, long players = 1);
// c_j(l) of the instance above.
Rat static_share_cost(long k, long j, long load);
// Least load with c_r(l) > k.
long static_share_lstar(long k);

// Two-source ladder: s1 = 0, s2 = 1, v_i = 1+i, u_i = n+1+i (i = 1..n),
// t = 2n+2. Edges are numbered in this order: (s1, v_i) for i < n, (s2, v_n),
// then per i: (v_i, u_i) cost 1, (v_i, u_{i+1}) cost 0 for i < n, (u_i, t)
// cost 0; last (s2, t) with cost sqrt(n). All +inf at load >= 2. Players:
// n-1 from s1 then 2 from s2.
GameInstance gen_multicast_convex_lb(long n, int digits = 12);

struct GenParams {
  std::string family;
  long n = 5;
  long k = 6;
  Rat c = Rat(1);
  int digits = 12;
  std::uint64_t seed = 42;
  long n_max = 0;    // 0: family default
  long players = 0;  // 0: family default
  // concave | concave-int | strictly-concave | convex | constant
  std::string shape = "concave";
  int max_vertices = 6;
  int max_edges = 10;
  bool multicast = false;
  // Random families redraw until the profile space is at most this size.
  std::uint64_t max_profiles = 0;
};

struct Generated {
  GameInstance instance;
  std::optional<SPTree> tree;
};

// Families: multicast-const-lb, dag-convex-lb, overcharge-lb, static-share-lb,
// multicast-convex-lb, random-dag, random-spg. Throws kBadParams.
Generated generate(const GenParams& params);

std::vector<std::string> family_names();

}  // namespace netshare

#endif  // NETSHARE_GENERATORS_HPP_
