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

#ifndef PANTS_CENSUS_H_
#define PANTS_CENSUS_H_

// Exhaustive enumeration of closed geodesics by combinatorial length and the
// verification suites built on it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pants/oracle.h"
#include "pants/rational.h"
#include "pants/word.h"

namespace pants {

inline constexpr int kMaxEnumerateLength = 24;
inline constexpr int kMaxCensusLength = 14;
inline constexpr int kMaxCountLength = 20;

struct EnumerateOptions {
  bool primitive_only = false;
  // Keep one of w and its inverse: the smaller canonical word.
  bool unoriented = false;
  bool include_simple = true;
  int threads = 1;
};

// Streams every cyclically reduced necklace of length `length` in ascending
// canonical order. Throws Error(kLengthOutOfRange) outside 1..24.
void ForEachClass(int length, const EnumerateOptions& options,
                  const std::function<void(const CyclicWord&)>& visit);

// Same sequence, materialized; uses `options.threads` workers.
std::vector<CyclicWord> EnumerateClasses(int length,
                                         const EnumerateOptions& options);

struct CensusRow {
  CyclicWord word;
  int length = 0;
  // Blocks of the full word; 0 for a boundary power.
  int n = 0;
  std::int64_t i = 0;
  std::int64_t h = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool primitive = true;
  bool simple = false;
};

CensusRow MakeCensusRow(const CyclicWord& w);

std::vector<CensusRow> Census(int length, const EnumerateOptions& options);

struct Spectrum {
  int length = 0;
  std::optional<std::int64_t> min_nonsimple;
  std::vector<CyclicWord> min_witnesses;
  std::int64_t max = 0;
  std::vector<CyclicWord> max_witnesses;
};

// 2 <= length <= 14. At most `witness_limit` witnesses per extreme, in
// canonical order.
Spectrum ComputeSpectrum(int length, int threads = 1,
                         std::size_t witness_limit = 8);
Spectrum SpectrumOf(const std::vector<CensusRow>& rows,
                    std::size_t witness_limit = 8);

// Names of the checks violated by `row`: "theorem1", "theorem2",
// "theoremH", "propH1", "corollary".
std::vector<std::string> CheckRow(const CensusRow& row);

struct Violation {
  CensusRow row;
  std::vector<std::string> checks;
};

struct OracleMismatch {
  CyclicWord word;
  std::int64_t i = 0;
  std::optional<std::int64_t> oracle;  // empty when the oracle failed
  std::string error;
};

struct VerifyReport {
  int max_length = 0;
  std::int64_t classes = 0;
  std::vector<Violation> violations;
  bool oracle_checked = false;
  std::vector<OracleMismatch> oracle_mismatches;

  bool ok() const {
    return violations.empty() && oracle_mismatches.empty();
  }
};

// All classes of length 1..max_length (<= 14).
VerifyReport VerifyBounds(int max_length, int threads = 1);

// Adds oracle agreement over the same classes (max_length <= 8).
void VerifyOracle(VerifyReport& report, const ConfigParams& params,
                  int threads = 1);

struct EpsilonReport {
  int length = 0;
  Rational epsilon;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
  std::int64_t total = 0;
  Rational paper_total;
};

// (1/4 - eps) L^2 <= i, compared exactly.
bool InEpsilonA(std::int64_t i, int length, const Rational& eps);
// L - 2n <= 2 sqrt(eps) L, compared exactly.
bool InEpsilonB(int n, int length, const Rational& eps);

// 8 * 3^(L-2) / L.
Rational ClosedFormClassCount(int length);

// 0 < eps < 1/4 and 1 <= length <= 14.
EpsilonReport EpsilonCensus(int length, const Rational& eps, int threads = 1);
EpsilonReport EpsilonCensusOf(const std::vector<CensusRow>& rows, int length,
                              const Rational& eps);

// Classes of the words w' (aB)^t of length `length` with |w'| <= 6 eps L and
// t >= 1, in canonical order.
std::vector<CyclicWord> MembershipConstruction(int length,
                                               const Rational& eps);

struct ClassCounts {
  int length = 0;
  std::int64_t all = 0;
  std::int64_t primitive = 0;
  std::int64_t simple = 0;
  Rational paper_formula;
};

// length <= 20.
ClassCounts CountClasses(int length, int threads = 1);

}  // namespace pants

#endif  // PANTS_CENSUS_H_
