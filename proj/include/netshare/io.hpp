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

#ifndef NETSHARE_IO_HPP_
#define NETSHARE_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "netshare/cost.hpp"
#include "netshare/engine.hpp"
#include "netshare/sp_tree.hpp"

namespace netshare {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceFormatVersion = 1;

// Tables with n_max above this are written as marginal runs.
inline constexpr long kDenseCostLimit = 512;

struct ProtocolSpec {
  std::string name;
  Json params = Json::object();

  friend bool operator==(const ProtocolSpec&, const ProtocolSpec&) = default;
};

struct InstanceFile {
  GameInstance instance;
  std::optional<SPTree> tree;
  std::optional<ProtocolSpec> protocol;
};

Json rat_to_json(const Rat& r);
// Accepts "p/q", "inf", decimals and JSON integers. Throws kParse.
Rat rat_from_json(const Json& j);

Json cost_to_json(const CostTable& cost);
CostTable cost_from_json(const Json& j, long n_max);

Json instance_to_json(const InstanceFile& file);
// Throws kParse, plus the validation errors of GameInstance and SPTree.
InstanceFile instance_from_json(const Json& j);

InstanceFile read_instance_file(const std::string& path);  // kIo, kParse
void write_instance_file(const std::string& path, const InstanceFile& file);  // kIo
void write_json_file(const std::string& path, const Json& j);  // kIo

// FNV-1a 64 of the canonical instance serialization, as 16 hex digits.
std::string instance_digest(const InstanceFile& file);

Json path_to_json(const Path& path);
Json profile_to_json(const StrategyProfile& profile);
StrategyProfile profile_from_json(const Json& j);

Json report_to_json(const AnalysisReport& report, const InstanceFile& file,
                    const EnumerationOptions& options);
Json brd_to_json(const BrdResult& result, const Rat& final_cost, const InstanceFile& file,
                 const std::string& protocol);

}  // namespace netshare

#endif  // NETSHARE_IO_HPP_
