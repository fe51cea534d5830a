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

#include "pants/intersection.h"

#include <gtest/gtest.h>

#include <variant>

#include "pants/census.h"
#include "pants/error.h"

namespace pants {
namespace {

BlockForm FormOf(std::string_view text) {
  auto d = DecomposeBlocks(CyclicWord::FromText(text));
  return std::get<BlockForm>(d);
}

std::vector<CyclicWord> Classes(int length) {
  return EnumerateClasses(length, {});
}

bool UsesOnly(const CyclicWord& w, Letter x, Letter y) {
  for (Letter c : w.letters()) {
    if (c != x && c != y) return false;
  }
  return true;
}

TEST(LiftsTest, OnePerShift) {
  const std::vector<GeodesicLift> ab = Lifts(FormOf("ab"));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_EQ(ToString(ab[0].plus.period()), "ab");
  EXPECT_EQ(ab[0].tag.kind, LiftKind::kAlpha);
  EXPECT_EQ(ToString(ab[1].plus.period()), "ba");
  EXPECT_EQ(ab[1].tag.kind, LiftKind::kBeta);

  const std::vector<GeodesicLift> cube = Lifts(FormOf("aaaB"));
  ASSERT_EQ(cube.size(), 4u);
  EXPECT_EQ(ToString(cube[0].plus.period()), "aaaB");
  EXPECT_EQ(ToString(cube[1].plus.period()), "aaBa");
  EXPECT_EQ(ToString(cube[2].plus.period()), "aBaa");
  EXPECT_EQ(ToString(cube[3].plus.period()), "Baaa");
  EXPECT_EQ(ToString(cube[3].minus.period()), "AAAb");

  EXPECT_EQ(Lifts(FormOf("aaBaB")).size(), 5u);
}

TEST(LiftsTest, TagsAreOneBasedBlocks) {
  const BlockForm f = FormOf("aaBaB");
  const GeodesicLift g = AlphaLift(f, 1, 0);
  EXPECT_EQ(g.tag.block, 2);
  EXPECT_EQ(ToString(g.plus.period()), "aBaaB");
  EXPECT_EQ(ToString(BetaLift(f, 0, 0).plus.period()), "BaBaa");
}

TEST(ComputeHTest, Pins) {
  EXPECT_EQ(ComputeH(FormOf("aB")).h, 1);
  EXPECT_EQ(ComputeH(FormOf("aaBaB")).h, 5);
  EXPECT_EQ(ComputeH(FormOf("aabab")).h, 1);
}

TEST(ComputeHTest, BreakdownOfFigureEight) {
  const HBreakdown h = ComputeH(FormOf("aB"));
  EXPECT_EQ(h.set_counts.at("D2_1"), 1);
  EXPECT_EQ(h.set_counts.at("C1_1"), 0);
  EXPECT_EQ(h.set_counts.at("C2_1"), 0);
  EXPECT_EQ(h.set_counts.at("D1_1"), 0);
  EXPECT_EQ(h.set_counts.size(), 4u);
}

TEST(ComputeHTest, RejectsPowers) {
  BlockForm f;
  f.blocks = {{Letter::a, 1, Letter::B, 1}, {Letter::a, 1, Letter::B, 1}};
  f.length = 4;
  try {
    ComputeH(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPrimitiveInput);
  }
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(ClosedFormTerm(FormOf("ab")), 0);
  EXPECT_EQ(ClosedFormTerm(FormOf("aaBaB")), 1);
  EXPECT_EQ(ClosedFormTerm(FormOf("aaaB")), 2);
}

TEST(SelfIntersectionTest, GeometricValues) {
  // Values confirmed by the disk model in oracle_test.
  EXPECT_EQ(SelfIntersection("aaaB").i, 3);
  EXPECT_EQ(SelfIntersection("ab").i, 0);
  EXPECT_EQ(SelfIntersection("aB").i, 1);
  EXPECT_EQ(SelfIntersection("aabab").i, 2);
  EXPECT_EQ(SelfIntersection("aaBaB").i, 6);
  EXPECT_EQ(SelfIntersection("aBABab").i, 5);
  EXPECT_EQ(SelfIntersection("aBABAB").i, 3);
}

TEST(SelfIntersectionTest, PowerReport) {
  const IntersectionReport r = SelfIntersection("aBaB");
  EXPECT_EQ(r.i, 4);
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.root.str(), "aB");
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.length, 4);
  EXPECT_EQ(r.h, 1);
  EXPECT_EQ(r.lower_bound, 0);
  EXPECT_EQ(r.upper_bound, 4);
}

TEST(SelfIntersectionTest, BoundaryPowersAreSimple) {
  const IntersectionReport r = SelfIntersection("bbbb");
  EXPECT_TRUE(r.simple_power);
  EXPECT_TRUE(r.simple());
  EXPECT_EQ(r.n, 0);
  EXPECT_EQ(SelfIntersection("abab").i, 0);
}

TEST(SelfIntersectionTest, ReducesText) {
  EXPECT_EQ(SelfIntersection("baaaBB").word.str(), "aaaB");
  EXPECT_THROW(SelfIntersection("aA"), Error);
}

TEST(BoundsTest, Examples) {
  BlockForm six;
  six.blocks.resize(3);
  six.length = 6;
  TheoremBounds b = Bounds(six, 6);
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 9);
  EXPECT_EQ(b.parity_lower, 2);
  EXPECT_EQ(b.parity_upper, 9);
  b = Bounds(FormOf("aaBaB"), 5);
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 6);
  EXPECT_EQ(b.parity_lower, 2);
  EXPECT_EQ(b.parity_upper, 6);
  b = Bounds(FormOf("ab"), 2);
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 1);
}

TEST(InvariantTest, BlockRotationIndependence) {
  for (int length = 2; length <= 10; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      if (PrimitiveRoot(w).multiplicity != 1) continue;
      auto d = DecomposeBlocks(w);
      if (std::holds_alternative<SimplePower>(d)) continue;
      const BlockForm& base = std::get<BlockForm>(d);
      const std::int64_t i = ComputeH(base).h + ClosedFormTerm(base);
      for (std::size_t k = 0; k < w.size(); ++k) {
        const std::optional<BlockForm> f = ReadBlocks(Rotate(w.letters(), k));
        if (!f) continue;
        ASSERT_EQ(ComputeH(*f).h + ClosedFormTerm(*f), i) << w.str() << " " << k;
      }
    }
  }
}

TEST(InvariantTest, OrientationAndMirror) {
  for (int length = 1; length <= 10; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      const std::int64_t i = SelfIntersection(w).i;
      ASSERT_EQ(SelfIntersection(CanonicalRotation(InverseWord(w.letters()))).i,
                i)
          << w.str();
      ASSERT_EQ(SelfIntersection(CanonicalRotation(MirrorWord(w.letters()))).i,
                i)
          << w.str();
    }
  }
}

TEST(InvariantTest, ScalingLaw) {
  for (int length = 1; length <= 6; ++length) {
    for (const CyclicWord& w : EnumerateClasses(length, {.primitive_only = true})) {
      const std::int64_t i = SelfIntersection(w).i;
      for (int m = 2; m <= 3; ++m) {
        Word power;
        for (int k = 0; k < m; ++k) {
          power.insert(power.end(), w.letters().begin(), w.letters().end());
        }
        ASSERT_EQ(SelfIntersection(CanonicalRotation(power)).i, m * m * i)
            << w.str();
      }
    }
  }
}

TEST(InvariantTest, ReportIdentity) {
  for (int length = 2; length <= 10; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      const IntersectionReport r = SelfIntersection(w);
      std::int64_t sum = 0;
      for (const auto& [label, count] : r.set_counts) sum += count;
      ASSERT_EQ(sum, r.h);
      const std::int64_t m2 =
          static_cast<std::int64_t>(r.multiplicity) * r.multiplicity;
      ASSERT_EQ(r.i, m2 * (r.h + r.closed_form));
      ASSERT_GE(r.h, 0);
      ASSERT_GE(r.i, 0);
    }
  }
}

TEST(TheoremTest, LengthBoundsExhaustive) {
  for (int length = 2; length <= 12; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      const IntersectionReport r = SelfIntersection(w);
      if (r.multiplicity != 1 || r.simple()) continue;
      ASSERT_LE(length - r.n - 1, r.i) << w.str();
      ASSERT_LE(r.i, static_cast<std::int64_t>(r.n) * length -
                         static_cast<std::int64_t>(r.n) * r.n)
          << w.str();
    }
  }
}

TEST(TheoremTest, ParityBoundsHold) {
  for (int length = 2; length <= 12; ++length) {
    const TheoremBounds p = ParityBounds(length);
    for (const CyclicWord& w : Classes(length)) {
      const IntersectionReport r = SelfIntersection(w);
      if (r.simple()) continue;
      ASSERT_LE(p.parity_lower, r.i) << w.str();
      ASSERT_LE(r.i, p.parity_upper) << w.str();
    }
  }
}

TEST(TheoremTest, ParityMaximumAttained) {
  for (int length = 4; length <= 12; ++length) {
    std::int64_t best = 0;
    for (const CyclicWord& w : Classes(length)) {
      best = std::max(best, SelfIntersection(w).i);
    }
    EXPECT_EQ(best, ParityBounds(length).parity_upper) << length;
  }
}

TEST(TheoremTest, ParityMinimumAttained) {
  for (int length = 4; length <= 12; ++length) {
    std::optional<std::int64_t> least;
    for (const CyclicWord& w : Classes(length)) {
      const std::int64_t i = SelfIntersection(w).i;
      if (i > 0 && (!least || i < *least)) least = i;
    }
    ASSERT_TRUE(least.has_value());
    EXPECT_EQ(*least, ParityBounds(length).parity_lower) << "L = " << length;
  }
}

TEST(TheoremTest, HBoundsExhaustive) {
  for (int length = 2; length <= 12; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      const IntersectionReport r = SelfIntersection(w);
      if (r.multiplicity != 1 || r.simple_power) continue;
      const std::int64_t n = r.n;
      ASSERT_LE(n - 1, r.h) << w.str();
      ASSERT_LE(r.h, n * n + (n - 1) * (n - 1)) << w.str();
      if (UsesOnly(w, Letter::a, Letter::B)) {
        ASSERT_LE(n * n + n - 1, r.h) << w.str();
      }
      if (UsesOnly(w, Letter::a, Letter::b)) {
        ASSERT_LE(r.h, (n - 1) * (n - 1)) << w.str();
      }
    }
  }
}

TEST(TheoremTest, CorollaryLengthWindow) {
  for (int length = 1; length <= 12; ++length) {
    for (const CyclicWord& w : Classes(length)) {
      const std::int64_t k = SelfIntersection(w).i;
      if (k == 0) continue;
      ASSERT_LE(4 * k, static_cast<std::int64_t>(length) * length) << w.str();
      ASSERT_LE(length, 2 * k + 2) << w.str();
    }
  }
}

}  // namespace
}  // namespace pants
