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

#ifndef PANTS_WORD_H_
#define PANTS_WORD_H_

// Words in the free group on {a, b}. Letters are written 'a', 'A', 'b', 'B'
// with uppercase denoting the inverse generator. The fixed total order
// a < A < b < B drives every canonical form in the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pants {

enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline constexpr Letter kAllLetters[] = {Letter::a, Letter::A, Letter::b,
                                         Letter::B};

constexpr Letter Inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

// a-type letters are a and A; b-type letters are b and B.
constexpr bool IsATypeLetter(Letter x) {
  return x == Letter::a || x == Letter::A;
}

constexpr int LetterIndex(Letter x) { return static_cast<int>(x); }

char ToChar(Letter x);
std::optional<Letter> LetterFromChar(char c);

using Word = std::vector<Letter>;

std::string ToString(std::span<const Letter> w);

// Transcribes `text` letter by letter. No reduction is applied.
// Throws Error(kEmptyInput) or Error(kInvalidCharacter) with the position.
Word ParseWord(std::string_view text);

bool IsReduced(std::span<const Letter> w);
bool IsCyclicallyReduced(std::span<const Letter> w);

Word FreelyReduce(std::span<const Letter> w);

// Free reduction followed by stripping of inverse end pairs. Idempotent.
// Throws Error(kTrivialWord) when the word is trivial in the group.
Word CyclicallyReduce(std::span<const Letter> w);

// Reverse-and-invert.
Word InverseWord(std::span<const Letter> w);

// The rotation starting at index `start`.
Word Rotate(std::span<const Letter> w, std::size_t start);

// Index of the lexicographically least rotation (first one on ties).
std::size_t LeastRotationIndex(std::span<const Letter> w);

// Letterwise inversion with the order kept (a <-> A, b <-> B).
Word MirrorWord(std::span<const Letter> w);

// Least rotation of a nonempty cyclically reduced word. This is the
// canonical representative of a free-homotopy class.
class CyclicWord {
 public:
  // Throws Error(kEmptyInput) / Error(kNotCyclicallyReduced).
  static CyclicWord FromCyclicallyReduced(std::span<const Letter> w);

  // Parses, cyclically reduces and canonicalizes.
  static CyclicWord FromText(std::string_view text);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const { return ToString(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& x,
                                          const CyclicWord& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  explicit CyclicWord(Word canonical) : letters_(std::move(canonical)) {}

  Word letters_;
};

CyclicWord CanonicalRotation(std::span<const Letter> w);

struct PrimitiveDecomposition {
  CyclicWord root;
  int multiplicity = 1;
};

// Smallest-period root via the prefix function.
PrimitiveDecomposition PrimitiveRoot(const CyclicWord& w);

// One syllable pair s^i r^j with s a-type and r b-type.
struct Block {
  Letter s = Letter::a;
  int i = 1;
  Letter r = Letter::b;
  int j = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

// s_1^{i_1} r_1^{j_1} ... s_n^{i_n} r_n^{j_n}.
struct BlockForm {
  std::vector<Block> blocks;
  int length = 0;

  int n() const { return static_cast<int>(blocks.size()); }
  Word word() const;
  // Offset of block k (zero-based) in word().
  int BlockStart(int k) const;
};

// A word using letters of only one type: a boundary power, always simple.
struct SimplePower {
  Letter letter = Letter::a;
  int exponent = 1;
};

// Rotates w to start with an a-type letter whose cyclic predecessor is
// b-type and reads off the blocks in order.
std::variant<BlockForm, SimplePower> DecomposeBlocks(const CyclicWord& w);

// Block form of an explicit (already rotated) word that starts with an a-type
// letter and ends with a b-type letter. Returns nullopt otherwise.
std::optional<BlockForm> ReadBlocks(std::span<const Letter> w);

}  // namespace pants

#endif  // PANTS_WORD_H_
