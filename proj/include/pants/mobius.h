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

#ifndef PANTS_MOBIUS_H_
#define PANTS_MOBIUS_H_

#include <complex>

namespace pants {

using Real = long double;
using Complex = std::complex<Real>;

// z -> (a z + b) / (c z + d).
struct Mobius {
  Complex a{1};
  Complex b{0};
  Complex c{0};
  Complex d{1};

  static Mobius Identity() { return {}; }

  Complex Apply(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex Trace() const { return a + d; }
  Complex Determinant() const { return a * d - b * c; }

  // Adjugate; the inverse map for any nonzero determinant.
  Mobius Inverse() const { return {d, -b, -c, a}; }

  // Rescaled to unit determinant.
  Mobius Normalized() const {
    const Complex s = std::sqrt(Determinant());
    return {a / s, b / s, c / s, d / s};
  }

  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

}  // namespace pants

#endif  // PANTS_MOBIUS_H_
