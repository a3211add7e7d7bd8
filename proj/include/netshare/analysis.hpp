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
#ifndef NETSHARE_ANALYSIS_HPP_
#define NETSHARE_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "netshare/engine.hpp"
#include "netshare/io.hpp"
#include "netshare/protocols.hpp"

namespace netshare {

struct AnalyzeRequest {
  // Falls back to the instance file's protocol block when empty.
  std::string protocol;
  std::string mode = "enumerate";  // enumerate | brd
  long max_iters = 1000;
  // Decimal places for nwa tie breaking; ignored when the file already
  // carries a perturbation record.
  long perturb = 3;
  // spg only: replace every table by strictify_concave(c, eps).
  std::optional<Rat> strictify;
  EnumerationOptions options;
};

struct AnalyzeOutcome {
  Json report;
  bool tie_detected = false;
  // The protocol guarantees an equilibrium but none was found.
  bool missing_equilibrium = false;
};

// Builds the protocol for `file` and runs enumeration or best-response
// dynamics. nwa instances without a perturbation record are perturbed first
// and the optimum is taken on the original tables. Throws kBadParams,
// kProtocolInapplicable, kPathExplosion and the protocol construction errors.
AnalyzeOutcome analyze(const InstanceFile& file, const AnalyzeRequest& request);

// Per-edge psi values from the protocol block ("psi": [...]), if present.
std::optional<std::vector<Rat>> psi_param(const InstanceFile& file);

// Unilateral-deviation check of `profile` under the named protocol.
Json nash_check(const InstanceFile& file, const std::string& protocol,
                const StrategyProfile& profile, std::size_t max_paths = kDefaultMaxPaths);

}  // namespace netshare

#endif  // NETSHARE_ANALYSIS_HPP_
