// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/errors.hpp"

namespace matroidkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kNotAMatroid: return "NotAMatroid";
    case ErrorCode::kNotABase: return "NotABase";
    case ErrorCode::kElementInBase: return "ElementInBase";
    case ErrorCode::kElementNotInBase: return "ElementNotInBase";
    case ErrorCode::kNotACircuit: return "NotACircuit";
    case ErrorCode::kElementsNotInCircuit: return "ElementsNotInCircuit";
    case ErrorCode::kNotAMinorCircuit: return "NotAMinorCircuit";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNotASpace: return "NotASpace";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace matroidkit
