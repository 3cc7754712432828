// Copyright 2026 The sumprod Authors
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

#include "sumprod/error.hpp"

namespace sumprod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidElement: return "InvalidElement";
    case ErrorCode::kNotRegularSemisimple: return "NotRegularSemisimple";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kCentralElement: return "CentralElement";
    case ErrorCode::kBadArguments: return "BadArguments";
    case ErrorCode::kNoSemisimpleStart: return "NoSemisimpleStart";
    case ErrorCode::kZeroInC: return "ZeroInC";
    case ErrorCode::kInfeasibleSize: return "InfeasibleSize";
    case ErrorCode::kUnknownClaim: return "UnknownClaim";
    case ErrorCode::kDegenerateSeries: return "DegenerateSeries";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace sumprod
