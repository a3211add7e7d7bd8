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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "netshare/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  netshare::EnumerationOptions options;
  std::map<int, std::pair<netshare::CheckResult, double>> results;
  for (const auto& runner : netshare::criterion_runners()) {
    const auto start = std::chrono::steady_clock::now();
    auto checks = runner.run(seed, options);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& c : checks) results.emplace(c.criterion, std::make_pair(std::move(c), secs));
  }
  bool all = true;
  for (const auto& [id, entry] : results) {
    const auto& [c, secs] = entry;
    all = all && c.pass;
    std::printf("[%s] criterion %2d: %s: %s (%.1fs)\n", c.pass ? "PASS" : "FAIL", id,
                c.name.c_str(), c.detail.c_str(), secs);
  }
  std::printf("%s: %zu criteria, seed %llu\n", all ? "ALL PASS" : "SOME FAILED", results.size(),
              static_cast<unsigned long long>(seed));
  return all ? 0 : 1;
}
