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

#ifndef PANTS_BOUNDARY_ORDER_H_
#define PANTS_BOUNDARY_ORDER_H_

// Circular order of limit points coded by infinite reduced words, and the
// linking test for two lifts of a closed geodesic.
//
// The first-order arcs A(e) sit anticlockwise around the circle in the
// cyclic order (a, B, b, A). Positions are measured anticlockwise from the
// base point I between the A-arc and the a-arc. Two points are ordered by
// their first letters in the alphabet starting at a; if they share a prefix
// e_1 ... e_m, the next letters are compared in the alphabet starting at the
// inverse of e_m.

#include <array>
#include <compare>
#include <cstdint>

#include "pants/word.h"

namespace pants {

class CyclicAlphabet {
 public:
  explicit CyclicAlphabet(Letter base);

  Letter base() const { return ordering_[0]; }
  const std::array<Letter, 4>& ordering() const { return ordering_; }
  int Position(Letter x) const { return position_[LetterIndex(x)]; }
  bool Precedes(Letter x, Letter y) const { return Position(x) < Position(y); }

 private:
  std::array<Letter, 4> ordering_;
  std::array<int, 4> position_;
};

// The four letters anticlockwise starting at `base`.
CyclicAlphabet AlphabetOrder(Letter base);

// The limit point period^infinity.
class PeriodicEndpoint {
 public:
  // `period` must be nonempty and cyclically reduced.
  explicit PeriodicEndpoint(Word period);

  const Word& period() const { return period_; }
  Letter At(std::size_t index) const { return period_[index % period_.size()]; }

 private:
  Word period_;
};

// Anticlockwise position order from I. Equal iff the infinite words agree.
std::strong_ordering Compare(const PeriodicEndpoint& x,
                             const PeriodicEndpoint& y);

enum class LiftKind : std::uint8_t { kAlpha, kBeta };

// alpha_{k,m} or beta_{k,p}; `block` is one-based.
struct LiftTag {
  LiftKind kind = LiftKind::kAlpha;
  int block = 1;
  int offset = 0;
};

struct GeodesicLift {
  PeriodicEndpoint plus;
  PeriodicEndpoint minus;
  LiftTag tag;
};

// Lift with attracting endpoint period^inf and repelling endpoint
// inverse(period)^inf.
GeodesicLift MakeLift(Word plus_period, LiftTag tag = {});

// True iff the endpoint pairs are pairwise distinct and separate each other.
// Coincident axes are not linked. A single shared endpoint cannot occur for
// axes of hyperbolic elements in a free group; it counts as not linked and
// bumps SharedEndpointAnomalies().
bool Linked(const GeodesicLift& g1, const GeodesicLift& g2);

std::uint64_t SharedEndpointAnomalies();

}  // namespace pants

#endif  // PANTS_BOUNDARY_ORDER_H_
