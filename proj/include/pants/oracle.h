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

#ifndef PANTS_ORACLE_H_
#define PANTS_ORACLE_H_

// Floating-point model of the pants group as a Schottky group acting on the
// Poincare disk. Counts self-intersections geometrically, independently of
// the word combinatorics.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pants/mobius.h"
#include "pants/word.h"

namespace pants {

// Disk parameters listed in arc order a, B, b, A starting from angle 0.
struct ConfigParams {
  std::array<double, 4> angles_deg{45.0, 135.0, 225.0, 315.0};
  std::array<double, 4> radii{0.55, 0.55, 0.55, 0.55};
};

ConfigParams DefaultConfigParams();

// The letter whose half-disk sits at slot `slot` of ConfigParams.
Letter SlotLetter(int slot);

struct HalfDisk {
  Letter letter = Letter::a;
  Real angle = 0;  // radians
  Complex center;
  Real radius = 0;
  // Half-width of the boundary arc A(letter), in radians.
  Real arc_half_width = 0;
};

class SchottkyConfig {
 public:
  const ConfigParams& params() const { return params_; }
  const HalfDisk& disk(Letter x) const { return disks_[LetterIndex(x)]; }
  // Maps the complement of the open disk D(inverse(x)) onto D(x).
  const Mobius& generator(Letter x) const { return gens_[LetterIndex(x)]; }

  Mobius WordMatrix(std::span<const Letter> w) const;

  // Boundary point on the closed arc A(x), up to `tol` radians.
  bool OnArc(Letter x, Complex u, Real tol = 1e-9L) const;

 private:
  friend SchottkyConfig BuildConfig(const ConfigParams& params);
  ConfigParams params_;
  std::array<HalfDisk, 4> disks_;
  std::array<Mobius, 4> gens_;
};

// Throws Error(kInvalidConfiguration) naming the violated condition.
SchottkyConfig BuildConfig(const ConfigParams& params);

struct FixedPointPair {
  Complex attracting;
  Complex repelling;
};

// Throws Error(kNumericalDegeneracy) when the word matrix is not hyperbolic
// or the attracting point misses the arc of the first letter.
FixedPointPair FixedPoints(std::span<const Letter> w,
                           const SchottkyConfig& cfg);

// Axis endpoints of the lift for each cyclic shift of `w`, shift k first
// reading w[k].
std::vector<FixedPointPair> ShiftAxes(std::span<const Letter> w,
                                      const SchottkyConfig& cfg);

// Endpoint pairs alternate around the unit circle.
bool NumericLinked(const FixedPointPair& g, const FixedPointPair& h);

// Crossing point of two linked axes.
Complex GeodesicIntersection(const FixedPointPair& g,
                             const FixedPointPair& h);

struct DomainReduction {
  Complex point;
  // Generators applied, in order.
  Word applied;
  // Product of the applied generators; maps the input to `point`.
  Mobius map;
};

// Pulls `z` back into the closed fundamental domain. Points on C(A) or C(B)
// are moved to their partners on C(a) or C(b).
DomainReduction ReduceToDomain(Complex z, const SchottkyConfig& cfg,
                               Real boundary_tol = 1e-9L,
                               int max_steps = 10000);

bool InFundamentalDomain(Complex z, const SchottkyConfig& cfg,
                         Real tol = 1e-9L);

struct OracleOptions {
  Real dedupe_tol = 1e-6L;
  Real boundary_tol = 1e-9L;
  Real match_tol = 1e-6L;
  int max_steps = 10000;
};

// Number of distinct intersection points in the fundamental domain. Works on
// the primitive root and scales by multiplicity^2. Throws
// Error(kBoundaryAmbiguity) if an image lift cannot be identified.
std::int64_t OracleSelfIntersection(const CyclicWord& w,
                                    const SchottkyConfig& cfg,
                                    const OracleOptions& options = {});

// Retries on kBoundaryAmbiguity with radii scaled by 1.01, at most
// `retries` times.
std::int64_t OracleWithRetry(const CyclicWord& w, const ConfigParams& params,
                             const OracleOptions& options = {},
                             int retries = 3);

}  // namespace pants

#endif  // PANTS_ORACLE_H_
