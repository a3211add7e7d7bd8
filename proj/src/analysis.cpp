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
#include "netshare/analysis.hpp"

#include <utility>

#include "netshare/error.hpp"

namespace netshare {

std::optional<std::vector<Rat>> psi_param(const InstanceFile& file) {
  if (!file.protocol || !file.protocol->params.contains("psi")) return std::nullopt;
  std::vector<Rat> psi;
  for (const Json& v : file.protocol->params["psi"]) psi.push_back(rat_from_json(v));
  return psi;
}

namespace {

std::string protocol_of(const InstanceFile& file, const std::string& requested) {
  std::string name = requested;
  if (name.empty() && file.protocol) name = file.protocol->name;
  if (name.empty()) throw Error(ErrorKind::kBadParams, "no protocol given");
  return name;
}

// Instance the protocol runs on, plus the pre-perturbation original for nwa.
std::pair<GameInstance, std::optional<GameInstance>> prepare(const InstanceFile& file,
                                                             ProtocolKind kind, long perturb,
                                                             const std::optional<Rat>& eps) {
  GameInstance base = file.instance;
  std::optional<GameInstance> original;
  if (eps) {
    if (kind != ProtocolKind::kSpg) {
      throw Error(ErrorKind::kBadParams, "strictify applies to spg only");
    }
    for (auto& c : base.costs) c = strictify_concave(c, *eps);
  }
  if (kind == ProtocolKind::kNwa && !base.perturbation) {
    if (!base.symmetric()) {
      throw Error(ErrorKind::kProtocolInapplicable, "nwa needs a symmetric instance");
    }
    if (!base.all_finite()) {
      throw Error(ErrorKind::kProtocolInapplicable, "nwa needs finite costs");
    }
    original = base;
    base = perturb_for_ties(base, perturb);
  }
  return {std::move(base), std::move(original)};
}

}  // namespace

AnalyzeOutcome analyze(const InstanceFile& file, const AnalyzeRequest& request) {
  const std::string name = protocol_of(file, request.protocol);
  const ProtocolKind kind = parse_protocol_name(name);
  auto [base, original] = prepare(file, kind, request.perturb, request.strictify);
  auto protocol = make_protocol(kind, base, file.tree, psi_param(file));

  AnalyzeOutcome out;
  if (request.mode == "brd") {
    const StrategySpace space = strategy_space(base, request.options.max_paths);
    StrategyProfile start;
    for (const auto& options : space.paths) start.paths.push_back(options.front());
    const BrdResult res =
        best_response_dynamics(*protocol, start, request.max_iters, request.options.max_paths);
    out.report = brd_to_json(res, charged_profile_cost(*protocol, res.profile), file, name);
    out.tie_detected = protocol->certifies_ties() && res.tie_hits > 0;
    return out;
  }
  if (request.mode != "enumerate") {
    throw Error(ErrorKind::kBadParams, "mode must be enumerate or brd");
  }
  const AnalysisReport rep =
      poa_report(*protocol, request.options, original ? &*original : nullptr);
  out.report = report_to_json(rep, file, request.options);
  out.tie_detected = protocol->certifies_ties() && rep.tie_detector_hits > 0;
  out.missing_equilibrium = protocol->claims_stable() && rep.no_equilibrium();
  return out;
}

Json nash_check(const InstanceFile& file, const std::string& protocol,
                const StrategyProfile& profile, std::size_t max_paths) {
  const ProtocolKind kind = parse_protocol_name(protocol_of(file, protocol));
  auto [base, original] = prepare(file, kind, 3, std::nullopt);
  auto p = make_protocol(kind, base, file.tree, psi_param(file));
  check_profile(base, profile);
  const NashResult res = is_nash(*p, profile, max_paths);
  const ShareMatrix shares = compute_shares(*p, profile);
  Json totals = Json::array();
  for (size_t i = 0; i < profile.paths.size(); ++i) {
    totals.push_back(rat_to_json(shares.player_total(i)));
  }
  Json j;
  j["is_nash"] = res.is_nash;
  j["player_totals"] = totals;
  j["tie_detector_hits"] = res.tie_hits;
  if (res.witness) {
    const NashWitness& w = *res.witness;
    j["witness"] = {{"player", w.player},
                    {"from", path_to_json(w.from)},
                    {"to", path_to_json(w.to)},
                    {"old_total", rat_to_json(w.old_total)},
                    {"new_total", rat_to_json(w.new_total)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace netshare
