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

#ifndef MATROIDKIT_ERRORS_HPP_
#define MATROIDKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroidkit {

enum class ErrorCode {
  kZeroInverse,
  kDimensionMismatch,
  kFieldMismatch,
  kNotPrime,
  kElementOutOfRange,
  kGroundTooLarge,
  kNotAMatroid,
  kNotABase,
  kElementInBase,
  kElementNotInBase,
  kNotACircuit,
  kElementsNotInCircuit,
  kNotAMinorCircuit,
  kNotAPartition,
  kNotASpace,
  kInvalidGraph,
  kInvalidName,
  kParseError,
  kInvalidArgument,
  // A property that holds for every matroid was found violated.
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_ERRORS_HPP_
