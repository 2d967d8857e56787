// Copyright 2026 The rindler-tangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rindler {

enum class ErrorCode {
  kNotHermitian,
  kNoConvergence,
  kDimensionMismatch,
  kAllZeroAmplitudes,
  kInvalidKet,
  kDuplicateMode,
  kNotAPermutation,
  kInvalidSpec,
  kOutOfRange,
  kMissingParty,
  kNotMinkowski,
  kEmptyKeep,
  kUnknownMode,
  kNotTripartite,
  kParseError,
  kIoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAllZeroAmplitudes: return "AllZeroAmplitudes";
    case ErrorCode::kInvalidKet: return "InvalidKet";
    case ErrorCode::kDuplicateMode: return "DuplicateMode";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kMissingParty: return "MissingParty";
    case ErrorCode::kNotMinkowski: return "NotMinkowski";
    case ErrorCode::kEmptyKeep: return "EmptyKeep";
    case ErrorCode::kUnknownMode: return "UnknownMode";
    case ErrorCode::kNotTripartite: return "NotTripartite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rindler
