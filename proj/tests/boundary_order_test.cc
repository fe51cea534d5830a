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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "testing/brute_force.h"

namespace pants {
namespace {

PeriodicEndpoint P(std::string_view text) {
  return PeriodicEndpoint(ParseWord(text));
}

std::array<Letter, 4> Letters(std::string_view text) {
  const Word w = ParseWord(text);
  return {w[0], w[1], w[2], w[3]};
}

TEST(AlphabetOrderTest, RotationsOfTheConfigurationCycle) {
  EXPECT_EQ(AlphabetOrder(Letter::a).ordering(), Letters("aBbA"));
  EXPECT_EQ(AlphabetOrder(Letter::A).ordering(), Letters("AaBb"));
  EXPECT_EQ(AlphabetOrder(Letter::b).ordering(), Letters("bAaB"));
  EXPECT_EQ(AlphabetOrder(Letter::B).ordering(), Letters("BbAa"));
}

TEST(AlphabetOrderTest, PositionsArePermutation) {
  for (Letter base : kAllLetters) {
    const CyclicAlphabet g = AlphabetOrder(base);
    EXPECT_EQ(g.base(), base);
    std::array<bool, 4> seen{};
    for (Letter x : kAllLetters) seen[g.Position(x)] = true;
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
  }
}

TEST(CompareTest, Examples) {
  EXPECT_EQ(Compare(P("ab"), P("ba")), std::strong_ordering::less);
  EXPECT_EQ(Compare(P("ab"), P("abab")), std::strong_ordering::equal);
  EXPECT_EQ(Compare(P("aab"), P("aaB")), std::strong_ordering::greater);
}

TEST(CompareTest, EqualIffSameInfiniteWord) {
  EXPECT_EQ(Compare(P("aB"), P("aBaBaB")), std::strong_ordering::equal);
  EXPECT_NE(Compare(P("aB"), P("Ba")), std::strong_ordering::equal);
  EXPECT_NE(Compare(P("aab"), P("aabaab" "ab")), std::strong_ordering::equal);
}

// Periods of every distinct periodic endpoint with primitive period of
// length <= max_length.
std::vector<PeriodicEndpoint> DistinctEndpoints(int max_length) {
  std::vector<PeriodicEndpoint> out;
  for (int length = 1; length <= max_length; ++length) {
    for (const std::string& text : testing::AllCyclicWords(length)) {
      const Word w = ParseWord(text);
      if (PrimitiveRoot(CanonicalRotation(w)).multiplicity != 1) continue;
      out.emplace_back(w);
    }
  }
  return out;
}

TEST(CompareTest, StrictTotalOrderExhaustive) {
  std::vector<PeriodicEndpoint> points = DistinctEndpoints(8);
  std::stable_sort(points.begin(), points.end(),
                   [](const PeriodicEndpoint& x, const PeriodicEndpoint& y) {
                     return Compare(x, y) < 0;
                   });
  for (std::size_t s = 0; s < points.size(); ++s) {
    ASSERT_EQ(Compare(points[s], points[s]), std::strong_ordering::equal);
    for (std::size_t t = s + 1; t < points.size(); ++t) {
      ASSERT_EQ(Compare(points[s], points[t]), std::strong_ordering::less)
          << ToString(points[s].period()) << " "
          << ToString(points[t].period());
      ASSERT_EQ(Compare(points[t], points[s]), std::strong_ordering::greater);
    }
  }
}

TEST(CompareTest, PowersOfAPeriodAreEqual) {
  for (int length = 1; length <= 5; ++length) {
    for (const std::string& text : testing::AllCyclicWords(length)) {
      EXPECT_EQ(Compare(P(text), P(text + text + text)),
                std::strong_ordering::equal);
    }
  }
}

TEST(MakeLiftTest, MinusIsInversePeriod) {
  const GeodesicLift g = MakeLift(ParseWord("aaBa"));
  EXPECT_EQ(ToString(g.plus.period()), "aaBa");
  EXPECT_EQ(ToString(g.minus.period()), "AbAA");
  EXPECT_NE(g.plus.At(0), g.minus.At(0));
}

TEST(LinkedTest, Examples) {
  EXPECT_TRUE(Linked(MakeLift(ParseWord("aB")), MakeLift(ParseWord("Ba"))));
  EXPECT_FALSE(Linked(MakeLift(ParseWord("ab")), MakeLift(ParseWord("ba"))));
  const GeodesicLift g = MakeLift(ParseWord("aaB"));
  EXPECT_FALSE(Linked(g, g));
}

TEST(LinkedTest, CoincidentAxesAreNotLinked) {
  EXPECT_FALSE(Linked(MakeLift(ParseWord("aB")), MakeLift(ParseWord("aBaB"))));
  EXPECT_FALSE(Linked(MakeLift(ParseWord("aB")), MakeLift(ParseWord("bA"))));
}

TEST(LinkedTest, SymmetricOverShiftPairs) {
  const std::uint64_t before = SharedEndpointAnomalies();
  for (int length = 2; length <= 8; ++length) {
    for (const std::string& text : testing::AllCyclicWords(length)) {
      const Word w = ParseWord(text);
      for (std::size_t s = 0; s < w.size(); ++s) {
        const GeodesicLift g = MakeLift(Rotate(w, s));
        const GeodesicLift h = MakeLift(Rotate(w, (s + 1) % w.size()));
        ASSERT_EQ(Linked(g, h), Linked(h, g)) << text;
      }
    }
  }
  EXPECT_EQ(SharedEndpointAnomalies(), before);
}

TEST(LinkedTest, SymmetricOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20000; ++trial) {
    const GeodesicLift g =
        MakeLift(ParseWord(testing::RandomCyclicWord(rng, 1 + trial % 9)));
    const GeodesicLift h =
        MakeLift(ParseWord(testing::RandomCyclicWord(rng, 1 + trial % 7)));
    ASSERT_EQ(Linked(g, h), Linked(h, g));
  }
}

}  // namespace
}  // namespace pants
