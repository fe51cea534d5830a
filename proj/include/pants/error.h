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

#ifndef PANTS_ERROR_H_
#define PANTS_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pants {

enum class ErrorCode {
  kInvalidCharacter,
  kEmptyInput,
  kTrivialWord,
  kNotCyclicallyReduced,
  kNonPrimitiveInput,
  kLengthOutOfRange,
  kInvalidArgument,
  kInvalidConfiguration,
  kNumericalDegeneracy,
  kBoundaryAmbiguity,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. `position`
// is set for parse errors and holds the zero-based offending index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

  // True for errors raised by the floating-point oracle.
  bool IsNumerical() const {
    return code_ == ErrorCode::kNumericalDegeneracy ||
           code_ == ErrorCode::kBoundaryAmbiguity;
  }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace pants

#endif  // PANTS_ERROR_H_
