// Copyright 2026 The wtab Authors
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

namespace wtab {

enum class ErrorCode {
  kParse,
  kNotSymplecticOrOrthogonal,
  kNotStandardLeviSpecial,
  kNotOddMultiplicityShape,
  kNotNilpotent,
  kNoSuchGenerator,
  kParityMixed,
  kCapExceeded,
  kTooShort,
  kNotACycle,
  kOddBoxCount,
  kNotFiniteDimensional,
  kCrossCheckMismatch,
  kMethodDisagreement,
  kAmbiguousPartner,
  kAmbiguousSharp,
  kInvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotSymplecticOrOrthogonal: return "NotSymplecticOrOrthogonal";
    case ErrorCode::kNotStandardLeviSpecial: return "NotStandardLeviSpecial";
    case ErrorCode::kNotOddMultiplicityShape: return "NotOddMultiplicityShape";
    case ErrorCode::kNotNilpotent: return "NotNilpotent";
    case ErrorCode::kNoSuchGenerator: return "NoSuchGenerator";
    case ErrorCode::kParityMixed: return "ParityMixed";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kOddBoxCount: return "OddBoxCount";
    case ErrorCode::kNotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::kCrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::kMethodDisagreement: return "MethodDisagreement";
    case ErrorCode::kAmbiguousPartner: return "AmbiguousPartner";
    case ErrorCode::kAmbiguousSharp: return "AmbiguousSharp";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Disagreement/ambiguity codes mean an internal consistency check failed.
  bool is_consistency_failure() const noexcept {
    return code_ == ErrorCode::kCrossCheckMismatch ||
           code_ == ErrorCode::kMethodDisagreement ||
           code_ == ErrorCode::kAmbiguousPartner ||
           code_ == ErrorCode::kAmbiguousSharp;
  }

 private:
  ErrorCode code_;
};

}  // namespace wtab
