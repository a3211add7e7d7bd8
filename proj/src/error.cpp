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

#include "netshare/error.hpp"

namespace netshare {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kPathExplosion: return "PathExplosion";
    case ErrorKind::kMalformedTable: return "MalformedTable";
    case ErrorKind::kInfiniteCost: return "InfiniteCost";
    case ErrorKind::kNotConcave: return "NotConcave";
    case ErrorKind::kInvalidEps: return "InvalidEps";
    case ErrorKind::kTerminalMismatch: return "TerminalMismatch";
    case ErrorKind::kEdgeCoverage: return "EdgeCoverage";
    case ErrorKind::kShareExceedsCost: return "ShareExceedsCost";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kZeroUnitCost: return "ZeroUnitCost";
    case ErrorKind::kUnreachable: return "Unreachable";
    case ErrorKind::kKTooSmall: return "KTooSmall";
    case ErrorKind::kBadParams: return "BadParams";
    case ErrorKind::kProtocolInapplicable: return "ProtocolInapplicable";
    case ErrorKind::kArithmetic: return "Arithmetic";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kIo: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace netshare
