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

#include "pants/word.h"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <variant>

#include "pants/error.h"
#include "testing/brute_force.h"

namespace pants {
namespace {

using ::pants::testing::AllCyclicWords;
using ::pants::testing::RandomString;
using ::pants::testing::StringCanonical;

std::string Reduced(std::string_view text) {
  return ToString(CyclicallyReduce(ParseWord(text)));
}

TEST(ParseWordTest, TranscribesVerbatim) {
  EXPECT_EQ(ParseWord("aaab"),
            (Word{Letter::a, Letter::a, Letter::a, Letter::b}));
  EXPECT_EQ(ParseWord("aaaB"),
            (Word{Letter::a, Letter::a, Letter::a, Letter::B}));
  EXPECT_EQ(ToString(ParseWord("aAbB")), "aAbB");
}

TEST(ParseWordTest, ReportsBadCharacterPosition) {
  try {
    ParseWord("aX");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCharacter);
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(ParseWordTest, RejectsEmpty) {
  try {
    ParseWord("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(LetterTest, InverseIsInvolution) {
  for (Letter x : kAllLetters) {
    EXPECT_EQ(Inverse(Inverse(x)), x);
    EXPECT_NE(Inverse(x), x);
  }
}

TEST(CyclicallyReduceTest, Examples) {
  EXPECT_EQ(Reduced("abA"), "b");
  EXPECT_EQ(Reduced("aaaB"), "aaaB");
  EXPECT_THROW(Reduced("aBbA"), Error);
  try {
    Reduced("aBbA");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTrivialWord);
  }
}

TEST(CyclicallyReduceTest, IdempotentExhaustive) {
  for (int length = 1; length <= 12; ++length) {
    std::uint64_t total = 1;
    for (int k = 0; k < length; ++k) total *= 4;
    Word w(static_cast<std::size_t>(length));
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int k = 0; k < length; ++k, c /= 4) {
        w[k] = static_cast<Letter>(c % 4);
      }
      Word once;
      try {
        once = CyclicallyReduce(w);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kTrivialWord);
        continue;
      }
      ASSERT_TRUE(IsCyclicallyReduced(once));
      ASSERT_EQ(CyclicallyReduce(once), once);
    }
  }
}

TEST(CyclicallyReduceTest, IdempotentOnRandomUnreducedInput) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    const Word w = ParseWord(RandomString(rng, 1 + trial % 16));
    Word once;
    try {
      once = CyclicallyReduce(w);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kTrivialWord);
      continue;
    }
    ASSERT_TRUE(IsCyclicallyReduced(once));
    ASSERT_EQ(CyclicallyReduce(once), once);
  }
}

TEST(CanonicalRotationTest, Examples) {
  EXPECT_EQ(CanonicalRotation(ParseWord("Baaa")).str(), "aaaB");
  EXPECT_EQ(CanonicalRotation(ParseWord("ab")).str(), "ab");
  EXPECT_EQ(CanonicalRotation(ParseWord("bA")).str(), "Ab");
}

TEST(CanonicalRotationTest, RotationInvariantExhaustive) {
  for (int length = 1; length <= 12; ++length) {
    for (const std::string& text : AllCyclicWords(length)) {
      const Word w = ParseWord(text);
      const CyclicWord c = CanonicalRotation(w);
      ASSERT_EQ(c.str(), StringCanonical(text)) << text;
    }
  }
}

TEST(CanonicalRotationTest, AllRotationsAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string text =
        ::pants::testing::RandomCyclicWord(rng, 1 + trial % 12);
    const Word w = ParseWord(text);
    const CyclicWord c = CanonicalRotation(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      ASSERT_EQ(CanonicalRotation(Rotate(w, k)), c);
    }
  }
}

TEST(CyclicWordTest, RejectsNonCyclicallyReduced) {
  EXPECT_THROW(CyclicWord::FromCyclicallyReduced(ParseWord("abA")), Error);
  EXPECT_EQ(CyclicWord::FromText("abA").str(), "b");
}

TEST(InverseWordTest, Examples) {
  EXPECT_EQ(ToString(InverseWord(ParseWord("ab"))), "BA");
  EXPECT_EQ(ToString(InverseWord(ParseWord("aaaB"))), "bAAA");
  EXPECT_EQ(ToString(InverseWord(InverseWord(ParseWord("aB")))), "aB");
}

TEST(PrimitiveRootTest, Examples) {
  PrimitiveDecomposition p = PrimitiveRoot(CyclicWord::FromText("aBaB"));
  EXPECT_EQ(p.root.str(), "aB");
  EXPECT_EQ(p.multiplicity, 2);
  p = PrimitiveRoot(CyclicWord::FromText("aaaB"));
  EXPECT_EQ(p.root.str(), "aaaB");
  EXPECT_EQ(p.multiplicity, 1);
  p = PrimitiveRoot(CyclicWord::FromText("aBaBaB"));
  EXPECT_EQ(p.root.str(), "aB");
  EXPECT_EQ(p.multiplicity, 3);
}

TEST(PrimitiveRootTest, RootPowerRecoversWord) {
  for (int length = 1; length <= 10; ++length) {
    for (const std::string& text : AllCyclicWords(length)) {
      const CyclicWord w = CyclicWord::FromText(text);
      const PrimitiveDecomposition p = PrimitiveRoot(w);
      Word power;
      for (int k = 0; k < p.multiplicity; ++k) {
        power.insert(power.end(), p.root.letters().begin(),
                     p.root.letters().end());
      }
      ASSERT_EQ(CanonicalRotation(power), w) << text;
      ASSERT_EQ(PrimitiveRoot(p.root).multiplicity, 1);
    }
  }
}

TEST(BlockFormTest, Examples) {
  auto d = DecomposeBlocks(CyclicWord::FromText("aaBaB"));
  ASSERT_TRUE(std::holds_alternative<BlockForm>(d));
  const BlockForm& f = std::get<BlockForm>(d);
  EXPECT_EQ(f.n(), 2);
  EXPECT_EQ(f.length, 5);
  EXPECT_EQ(f.blocks[0], (Block{Letter::a, 2, Letter::B, 1}));
  EXPECT_EQ(f.blocks[1], (Block{Letter::a, 1, Letter::B, 1}));

  EXPECT_TRUE(std::holds_alternative<SimplePower>(
      DecomposeBlocks(CyclicWord::FromText("aaaa"))));

  auto g = DecomposeBlocks(CyclicWord::FromText("bbaa"));
  ASSERT_TRUE(std::holds_alternative<BlockForm>(g));
  EXPECT_EQ(ToString(std::get<BlockForm>(g).word()), "aabb");
  EXPECT_EQ(std::get<BlockForm>(g).blocks.front(),
            (Block{Letter::a, 2, Letter::b, 2}));
}

TEST(BlockFormTest, LengthsAddUpAndWordIsARotation) {
  for (int length = 2; length <= 12; ++length) {
    for (const std::string& text : AllCyclicWords(length)) {
      const CyclicWord w = CyclicWord::FromText(text);
      auto d = DecomposeBlocks(w);
      if (std::holds_alternative<SimplePower>(d)) continue;
      const BlockForm& f = std::get<BlockForm>(d);
      int sum = 0;
      for (const Block& b : f.blocks) {
        ASSERT_GE(b.i, 1);
        ASSERT_GE(b.j, 1);
        ASSERT_TRUE(IsATypeLetter(b.s));
        ASSERT_FALSE(IsATypeLetter(b.r));
        sum += b.i + b.j;
      }
      ASSERT_EQ(sum, length);
      ASSERT_EQ(f.length, length);
      ASSERT_EQ(CanonicalRotation(f.word()), w);
    }
  }
}

TEST(MirrorWordTest, InvertsEachLetterInPlace) {
  EXPECT_EQ(ToString(MirrorWord(ParseWord("aaBb"))), "AAbB");
}

}  // namespace
}  // namespace pants
