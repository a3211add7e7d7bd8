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

#ifndef NETSHARE_VERIFY_HPP_
#define NETSHARE_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "netshare/engine.hpp"
#include "netshare/generators.hpp"
#include "netshare/io.hpp"

namespace netshare {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// One runnable acceptance check. Some runners report several criteria.
struct CriterionRunner {
  std::string suite;  // paper-facts | properties
  std::vector<int> criteria;
  std::function<std::vector<CheckResult>(std::uint64_t seed, const EnumerationOptions&)> run;
};

const std::vector<CriterionRunner>& criterion_runners();
std::vector<std::string> suite_names();

// Throws kBadParams for unknown suites.
SuiteResult run_suite(std::string_view suite, std::uint64_t seed,
                      const EnumerationOptions& options = {});
Json suite_to_json(const SuiteResult& result);

// Seed of the i-th instance of a randomized family (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

// Individual criteria.
std::vector<CheckResult> verify_nwa_bound(std::uint64_t seed, const EnumerationOptions& options);
CheckResult verify_spg_poa(std::uint64_t seed, const EnumerationOptions& options);
CheckResult verify_psi_invariants(std::uint64_t seed, const EnumerationOptions& options);
CheckResult verify_incremental_poa(std::uint64_t seed, const EnumerationOptions& options);
CheckResult verify_multicast_facts(const EnumerationOptions& options);
CheckResult verify_dag_convex_facts(const EnumerationOptions& options);
CheckResult verify_overcharge_facts(const EnumerationOptions& options);
CheckResult verify_static_share_facts();
CheckResult verify_single_path_optimum(std::uint64_t seed, const EnumerationOptions& options);
CheckResult verify_weight_paths(std::uint64_t seed);

// The random families used by the criteria, exposed for tests.
GenParams nwa_family(std::uint64_t seed, int index);
GenParams spg_family(std::uint64_t seed, int index);
GenParams convex_spg_family(std::uint64_t seed, int index);
GenParams concave_family(std::uint64_t seed, int index);

// Symmetric profile with every player on `path`.
StrategyProfile all_on(const GameInstance& instance, const Path& path);

}  // namespace netshare

#endif  // NETSHARE_VERIFY_HPP_
