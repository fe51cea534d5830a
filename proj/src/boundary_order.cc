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

#include "pants/boundary_order.h"

#include <atomic>
#include <iostream>
#include <utility>

#include "pants/error.h"

namespace pants {
namespace {

constexpr std::array<Letter, 4> kConfigurationCycle = {Letter::a, Letter::B,
                                                       Letter::b, Letter::A};

std::atomic<std::uint64_t> shared_endpoint_anomalies{0};

}  // namespace

CyclicAlphabet::CyclicAlphabet(Letter base) {
  int offset = 0;
  while (kConfigurationCycle[offset] != base) ++offset;
  for (int q = 0; q < 4; ++q) {
    ordering_[q] = kConfigurationCycle[(offset + q) % 4];
    position_[LetterIndex(ordering_[q])] = q;
  }
}

CyclicAlphabet AlphabetOrder(Letter base) { return CyclicAlphabet(base); }

PeriodicEndpoint::PeriodicEndpoint(Word period) : period_(std::move(period)) {
  if (period_.empty() || !IsCyclicallyReduced(period_)) {
    throw Error(ErrorCode::kNotCyclicallyReduced,
                "endpoint period '" + ToString(period_) +
                    "' must be nonempty and cyclically reduced");
  }
}

std::strong_ordering Compare(const PeriodicEndpoint& x,
                             const PeriodicEndpoint& y) {
  static const CyclicAlphabet kByBase[4] = {
      CyclicAlphabet(Letter::a), CyclicAlphabet(Letter::A),
      CyclicAlphabet(Letter::b), CyclicAlphabet(Letter::B)};
  // Periodic sequences with periods p and q that agree on p + q letters
  // agree everywhere.
  const std::size_t cutoff = x.period().size() + y.period().size();
  for (std::size_t m = 0; m < cutoff; ++m) {
    const Letter ex = x.At(m);
    const Letter ey = y.At(m);
    if (ex == ey) continue;
    const CyclicAlphabet& alphabet =
        m == 0 ? kByBase[LetterIndex(Letter::a)]
               : kByBase[LetterIndex(Inverse(x.At(m - 1)))];
    return alphabet.Position(ex) <=> alphabet.Position(ey);
  }
  return std::strong_ordering::equal;
}

GeodesicLift MakeLift(Word plus_period, LiftTag tag) {
  Word minus = InverseWord(plus_period);
  return GeodesicLift{PeriodicEndpoint(std::move(plus_period)),
                      PeriodicEndpoint(std::move(minus)), tag};
}

bool Linked(const GeodesicLift& g1, const GeodesicLift& g2) {
  const auto p1m1 = Compare(g1.plus, g1.minus);
  const auto p1p2 = Compare(g1.plus, g2.plus);
  const auto p1m2 = Compare(g1.plus, g2.minus);
  const auto m1p2 = Compare(g1.minus, g2.plus);
  const auto m1m2 = Compare(g1.minus, g2.minus);
  const auto p2m2 = Compare(g2.plus, g2.minus);
  const int shared = (p1p2 == 0) + (p1m2 == 0) + (m1p2 == 0) + (m1m2 == 0);
  if (shared > 0 || p1m1 == 0 || p2m2 == 0) {
    if (shared == 1) {
      shared_endpoint_anomalies.fetch_add(1, std::memory_order_relaxed);
      std::cerr << "anomaly: lifts " << ToString(g1.plus.period()) << " and "
                << ToString(g2.plus.period()) << " share one endpoint\n";
    }
    return false;
  }
  // Orient g1 as the interval (lo, hi); g2 is linked iff exactly one of its
  // endpoints falls strictly inside.
  const bool plus_first = p1m1 < 0;
  auto inside = [&](std::strong_ordering vs_plus,
                    std::strong_ordering vs_minus) {
    // vs_plus = Compare(g1.plus, z), vs_minus = Compare(g1.minus, z).
    return plus_first ? (vs_plus < 0 && vs_minus > 0)
                      : (vs_minus < 0 && vs_plus > 0);
  };
  return inside(p1p2, m1p2) != inside(p1m2, m1m2);
}

std::uint64_t SharedEndpointAnomalies() {
  return shared_endpoint_anomalies.load(std::memory_order_relaxed);
}

}  // namespace pants
