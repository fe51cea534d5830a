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

#include <algorithm>

#include "pants/error.h"

namespace pants {

char ToChar(Letter x) {
  static constexpr char kChars[] = {'a', 'A', 'b', 'B'};
  return kChars[LetterIndex(x)];
}

std::optional<Letter> LetterFromChar(char c) {
  switch (c) {
    case 'a':
      return Letter::a;
    case 'A':
      return Letter::A;
    case 'b':
      return Letter::b;
    case 'B':
      return Letter::B;
    default:
      return std::nullopt;
  }
}

std::string ToString(std::span<const Letter> w) {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(ToChar(x));
  return out;
}

Word ParseWord(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kEmptyInput, "empty word");
  Word w;
  w.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    auto x = LetterFromChar(text[pos]);
    if (!x) {
      throw Error(ErrorCode::kInvalidCharacter,
                  "invalid character '" + std::string(1, text[pos]) +
                      "' at position " + std::to_string(pos) +
                      " (expected one of a, A, b, B)",
                  pos);
    }
    w.push_back(*x);
  }
  return w;
}

bool IsReduced(std::span<const Letter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == Inverse(w[i])) return false;
  }
  return true;
}

bool IsCyclicallyReduced(std::span<const Letter> w) {
  if (!IsReduced(w)) return false;
  return w.size() < 2 || w.back() != Inverse(w.front());
}

Word FreelyReduce(std::span<const Letter> w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == Inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

Word CyclicallyReduce(std::span<const Letter> w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyInput, "empty word");
  Word reduced = FreelyReduce(w);
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[hi - 1] == Inverse(reduced[lo])) {
    ++lo;
    --hi;
  }
  if (lo == hi) {
    throw Error(ErrorCode::kTrivialWord,
                "'" + ToString(w) + "' is trivial in the free group");
  }
  return Word(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
              reduced.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word InverseWord(std::span<const Letter> w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[w.size() - 1 - i] = Inverse(w[i]);
  }
  return out;
}

Word Rotate(std::span<const Letter> w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[(start + i) % w.size()]);
  }
  return out;
}

std::size_t LeastRotationIndex(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    Letter x = w[(i + k) % n];
    Letter y = w[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word MirrorWord(std::span<const Letter> w) {
  Word out(w.begin(), w.end());
  for (Letter& x : out) x = Inverse(x);
  return out;
}

CyclicWord CyclicWord::FromCyclicallyReduced(std::span<const Letter> w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyInput, "empty word");
  if (!IsCyclicallyReduced(w)) {
    throw Error(ErrorCode::kNotCyclicallyReduced,
                "'" + ToString(w) + "' is not cyclically reduced");
  }
  return CyclicWord(Rotate(w, LeastRotationIndex(w)));
}

CyclicWord CyclicWord::FromText(std::string_view text) {
  return FromCyclicallyReduced(CyclicallyReduce(ParseWord(text)));
}

CyclicWord CanonicalRotation(std::span<const Letter> w) {
  return CyclicWord::FromCyclicallyReduced(w);
}

PrimitiveDecomposition PrimitiveRoot(const CyclicWord& w) {
  const Word& s = w.letters();
  const std::size_t n = s.size();
  std::vector<std::size_t> prefix(n, 0);
  for (std::size_t q = 1; q < n; ++q) {
    std::size_t k = prefix[q - 1];
    while (k > 0 && s[q] != s[k]) k = prefix[k - 1];
    if (s[q] == s[k]) ++k;
    prefix[q] = k;
  }
  const std::size_t period = n - prefix[n - 1];
  if (period < n && n % period == 0) {
    Word root(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(period));
    return {CyclicWord::FromCyclicallyReduced(root),
            static_cast<int>(n / period)};
  }
  return {w, 1};
}

Word BlockForm::word() const {
  Word w;
  w.reserve(static_cast<std::size_t>(length));
  for (const Block& blk : blocks) {
    w.insert(w.end(), static_cast<std::size_t>(blk.i), blk.s);
    w.insert(w.end(), static_cast<std::size_t>(blk.j), blk.r);
  }
  return w;
}

int BlockForm::BlockStart(int k) const {
  int start = 0;
  for (int q = 0; q < k; ++q) start += blocks[q].i + blocks[q].j;
  return start;
}

std::optional<BlockForm> ReadBlocks(std::span<const Letter> w) {
  if (w.empty() || !IsATypeLetter(w.front()) || IsATypeLetter(w.back())) {
    return std::nullopt;
  }
  BlockForm form;
  form.length = static_cast<int>(w.size());
  std::size_t pos = 0;
  while (pos < w.size()) {
    Block blk;
    blk.s = w[pos];
    blk.i = 0;
    while (pos < w.size() && w[pos] == blk.s) {
      ++blk.i;
      ++pos;
    }
    // Inside one syllable type only the same letter can follow in a
    // reduced word, so a type change ends the run.
    if (pos == w.size() || IsATypeLetter(w[pos])) return std::nullopt;
    blk.r = w[pos];
    blk.j = 0;
    while (pos < w.size() && w[pos] == blk.r) {
      ++blk.j;
      ++pos;
    }
    if (pos < w.size() && !IsATypeLetter(w[pos])) return std::nullopt;
    form.blocks.push_back(blk);
  }
  return form;
}

std::variant<BlockForm, SimplePower> DecomposeBlocks(const CyclicWord& w) {
  const Word& s = w.letters();
  const std::size_t n = s.size();
  const bool has_a = std::any_of(s.begin(), s.end(), IsATypeLetter);
  const bool has_b = !std::all_of(s.begin(), s.end(), IsATypeLetter);
  if (!has_a || !has_b) return SimplePower{s.front(), static_cast<int>(n)};
  for (std::size_t start = 0; start < n; ++start) {
    if (IsATypeLetter(s[start]) && !IsATypeLetter(s[(start + n - 1) % n])) {
      auto form = ReadBlocks(Rotate(s, start));
      if (form) return *form;
      break;
    }
  }
  // A cyclically reduced word with both letter types always has an a-type
  // letter preceded by a b-type one.
  throw Error(ErrorCode::kNotCyclicallyReduced,
              "cannot read blocks of '" + w.str() + "'");
}

}  // namespace pants
