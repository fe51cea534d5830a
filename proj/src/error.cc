// Copyright 2026 The Pants Authors
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

#include "pants/error.h"

namespace pants {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacter:
      return "InvalidCharacter";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kTrivialWord:
      return "TrivialWord";
    case ErrorCode::kNotCyclicallyReduced:
      return "NotCyclicallyReduced";
    case ErrorCode::kNonPrimitiveInput:
      return "NonPrimitiveInput";
    case ErrorCode::kLengthOutOfRange:
      return "LengthOutOfRange";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidConfiguration:
      return "InvalidConfiguration";
    case ErrorCode::kNumericalDegeneracy:
      return "NumericalDegeneracy";
    case ErrorCode::kBoundaryAmbiguity:
      return "BoundaryAmbiguity";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace pants
