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

#ifndef PANTS_RATIONAL_H_
#define PANTS_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace pants {

// Positive-denominator fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Of(std::int64_t num, std::int64_t den);
  // Accepts "p/q" or an integer literal. Throws Error(kInvalidArgument).
  static Rational Parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den <
           static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
};

}  // namespace pants

#endif  // PANTS_RATIONAL_H_
