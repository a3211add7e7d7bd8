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

#ifndef NETSHARE_ERROR_HPP_
#define NETSHARE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace netshare {

enum class ErrorKind {
  kCycleDetected,
  kPathExplosion,
  kMalformedTable,
  kInfiniteCost,
  kNotConcave,
  kInvalidEps,
  kTerminalMismatch,
  kEdgeCoverage,
  kShareExceedsCost,
  kNotSymmetric,
  kZeroUnitCost,
  kUnreachable,
  kKTooSmall,
  kBadParams,
  kProtocolInapplicable,
  kArithmetic,
  kParse,
  kIo,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netshare

#endif  // NETSHARE_ERROR_HPP_
