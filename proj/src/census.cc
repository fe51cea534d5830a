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

#include "pants/census.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>
#include <variant>

#include "pants/error.h"
#include "pants/intersection.h"

namespace pants {
namespace {

// A node of the necklace generation tree: prefix a[1..t-1] and the length of
// its longest Lyndon prefix.
struct State {
  std::array<std::uint8_t, kMaxEnumerateLength + 1> a{};
  int t = 1;
  int p = 1;
};

class NecklaceGenerator {
 public:
  NecklaceGenerator(int n, bool primitive_only,
                    std::function<void(const CyclicWord&)> visit)
      : n_(n), primitive_only_(primitive_only), visit_(std::move(visit)) {}

  void Run(const State& start) {
    a_ = start.a;
    Gen(start.t, start.p);
  }

  // Collects the tree nodes at depth `depth` in generation order.
  std::vector<State> Frontier(int depth) {
    frontier_depth_ = depth;
    frontier_.clear();
    a_ = {};
    Gen(1, 1);
    frontier_depth_ = 0;
    return std::move(frontier_);
  }

 private:
  void Gen(int t, int p) {
    if (t == frontier_depth_ + 1 && frontier_depth_ > 0) {
      frontier_.push_back({a_, t, p});
      return;
    }
    if (t > n_) {
      if (n_ % p != 0 || (primitive_only_ && p != n_)) return;
      if (a_[n_] == (a_[1] ^ 1u)) return;
      Word w(static_cast<std::size_t>(n_));
      for (int k = 0; k < n_; ++k) w[k] = static_cast<Letter>(a_[k + 1]);
      visit_(CyclicWord::FromCyclicallyReduced(w));
      return;
    }
    for (int c = a_[t - p]; c < 4; ++c) {
      if (t > 1 && c == (a_[t - 1] ^ 1)) continue;
      a_[t] = static_cast<std::uint8_t>(c);
      Gen(t + 1, c == a_[t - p] ? p : t);
    }
  }

  int n_;
  bool primitive_only_;
  std::function<void(const CyclicWord&)> visit_;
  std::array<std::uint8_t, kMaxEnumerateLength + 1> a_{};
  int frontier_depth_ = 0;
  std::vector<State> frontier_;
};

void CheckLength(int length, int max) {
  if (length < 1 || length > max) {
    throw Error(ErrorCode::kLengthOutOfRange,
                "length " + std::to_string(length) + " outside 1.." +
                    std::to_string(max));
  }
}

bool Keep(const CyclicWord& w, const EnumerateOptions& options) {
  if (options.unoriented && CanonicalRotation(InverseWord(w.letters())) < w) {
    return false;
  }
  if (!options.include_simple && SelfIntersection(w).i == 0) return false;
  return true;
}

// Calls `fn(index, words)` once per generation subtree, from up to
// `threads` workers; `words` streams that subtree in order.
template <class Fn>
std::size_t ForEachPartition(int length, const EnumerateOptions& options,
                             Fn&& fn) {
  const int threads = std::max(1, options.threads);
  const int depth = std::min(length, threads == 1 ? 0 : 6);
  NecklaceGenerator probe(length, options.primitive_only, {});
  std::vector<State> states =
      depth == 0 ? std::vector<State>{State{}} : probe.Frontier(depth);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < states.size(); k = next++) {
      fn(k, [&](const std::function<void(const CyclicWord&)>& visit) {
        std::function<void(const CyclicWord&)> filtered =
            [&](const CyclicWord& w) {
              if (Keep(w, options)) visit(w);
            };
        NecklaceGenerator gen(length, options.primitive_only, filtered);
        gen.Run(states[k]);
      });
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return states.size();
}

template <class T, class Fn>
std::vector<T> ParallelCollect(int length, const EnumerateOptions& options,
                               Fn&& make) {
  std::vector<std::vector<T>> parts(1);
  std::mutex grow;
  // Partitions are known only after the frontier is built, so grow lazily.
  auto slot = [&](std::size_t k) -> std::vector<T>& {
    std::lock_guard<std::mutex> lock(grow);
    if (parts.size() <= k) parts.resize(k + 1);
    return parts[k];
  };
  ForEachPartition(length, options, [&](std::size_t k, auto&& run) {
    std::vector<T> local;
    run([&](const CyclicWord& w) { make(w, local); });
    slot(k) = std::move(local);
  });
  std::vector<T> out;
  for (std::vector<T>& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

bool UsesOnly(const CyclicWord& w, Letter x, Letter y) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](Letter c) { return c == x || c == y; });
}

void CheckEpsilon(const Rational& eps) {
  if (!(Rational::Of(0, 1) < eps) || !(eps < Rational::Of(1, 4))) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must satisfy 0 < eps < 1/4, got " + eps.str());
  }
}

}  // namespace

void ForEachClass(int length, const EnumerateOptions& options,
                  const std::function<void(const CyclicWord&)>& visit) {
  CheckLength(length, kMaxEnumerateLength);
  std::function<void(const CyclicWord&)> filtered =
      [&](const CyclicWord& w) {
        if (Keep(w, options)) visit(w);
      };
  NecklaceGenerator gen(length, options.primitive_only, filtered);
  gen.Run(State{});
}

std::vector<CyclicWord> EnumerateClasses(int length,
                                         const EnumerateOptions& options) {
  CheckLength(length, kMaxEnumerateLength);
  return ParallelCollect<CyclicWord>(
      length, options,
      [](const CyclicWord& w, std::vector<CyclicWord>& out) {
        out.push_back(w);
      });
}

CensusRow MakeCensusRow(const CyclicWord& w) {
  const IntersectionReport r = SelfIntersection(w);
  const std::int64_t m2 =
      static_cast<std::int64_t>(r.multiplicity) * r.multiplicity;
  return {w,           r.length,       r.n * r.multiplicity,
          r.i,         m2 * r.h,       r.lower_bound,
          r.upper_bound, r.multiplicity == 1, r.simple()};
}

std::vector<CensusRow> Census(int length, const EnumerateOptions& options) {
  CheckLength(length, kMaxEnumerateLength);
  return ParallelCollect<CensusRow>(
      length, options, [](const CyclicWord& w, std::vector<CensusRow>& out) {
        out.push_back(MakeCensusRow(w));
      });
}

Spectrum SpectrumOf(const std::vector<CensusRow>& rows,
                    std::size_t witness_limit) {
  Spectrum s;
  if (!rows.empty()) s.length = rows.front().length;
  for (const CensusRow& row : rows) {
    if (s.max_witnesses.empty() || row.i > s.max) {
      s.max = row.i;
      s.max_witnesses.clear();
    }
    if (row.i == s.max && s.max_witnesses.size() < witness_limit) {
      s.max_witnesses.push_back(row.word);
    }
    if (row.simple) continue;
    if (!s.min_nonsimple || row.i < *s.min_nonsimple) {
      s.min_nonsimple = row.i;
      s.min_witnesses.clear();
    }
    if (row.i == *s.min_nonsimple && s.min_witnesses.size() < witness_limit) {
      s.min_witnesses.push_back(row.word);
    }
  }
  return s;
}

Spectrum ComputeSpectrum(int length, int threads, std::size_t witness_limit) {
  CheckLength(length, kMaxCensusLength);
  if (length < 2) {
    throw Error(ErrorCode::kLengthOutOfRange, "spectrum needs length >= 2");
  }
  EnumerateOptions options;
  options.threads = threads;
  Spectrum s = SpectrumOf(Census(length, options), witness_limit);
  s.length = length;
  return s;
}

std::vector<std::string> CheckRow(const CensusRow& row) {
  std::vector<std::string> failed;
  const std::int64_t L = row.length;
  const std::int64_t n = row.n;
  if (!row.simple && row.primitive && n > 0 &&
      !(L - n - 1 <= row.i && row.i <= n * L - n * n)) {
    failed.push_back("theorem1");
  }
  if (!row.simple) {
    const TheoremBounds parity = ParityBounds(L);
    if (!(parity.parity_lower <= row.i && row.i <= parity.parity_upper)) {
      failed.push_back("theorem2");
    }
    const std::int64_t k = row.i;
    if (!(4 * k <= L * L && L <= 2 * k + 2)) failed.push_back("corollary");
  }
  if (n > 0) {
    const std::int64_t q = PrimitiveRoot(row.word).multiplicity;
    const std::int64_t hi = n * n + (n - q) * (n - q);
    if (!(q * (n - q) <= row.h && row.h <= hi)) failed.push_back("theoremH");
    if (UsesOnly(row.word, Letter::a, Letter::B) &&
        !(n * n + q * (n - q) <= row.h && row.h <= hi)) {
      failed.push_back("propH1");
    }
    if (UsesOnly(row.word, Letter::a, Letter::b) &&
        !(q * (n - q) <= row.h && row.h <= (n - q) * (n - q))) {
      failed.push_back("propH1");
    }
  }
  return failed;
}

VerifyReport VerifyBounds(int max_length, int threads) {
  CheckLength(max_length, kMaxCensusLength);
  VerifyReport report;
  report.max_length = max_length;
  EnumerateOptions options;
  options.threads = threads;
  for (int length = 1; length <= max_length; ++length) {
    for (CensusRow& row : Census(length, options)) {
      ++report.classes;
      std::vector<std::string> failed = CheckRow(row);
      if (!failed.empty()) {
        report.violations.push_back({std::move(row), std::move(failed)});
      }
    }
  }
  return report;
}

void VerifyOracle(VerifyReport& report, const ConfigParams& params,
                  int threads) {
  if (report.max_length > 8) {
    throw Error(ErrorCode::kLengthOutOfRange,
                "oracle verification is limited to length 8");
  }
  const SchottkyConfig cfg = BuildConfig(params);
  EnumerateOptions options;
  options.threads = threads;
  report.oracle_checked = true;
  for (int length = 1; length <= report.max_length; ++length) {
    std::vector<OracleMismatch> bad = ParallelCollect<OracleMismatch>(
        length, options,
        [&](const CyclicWord& w, std::vector<OracleMismatch>& out) {
          const std::int64_t i = SelfIntersection(w).i;
          try {
            std::int64_t o = 0;
            try {
              o = OracleSelfIntersection(w, cfg);
            } catch (const Error& e) {
              if (e.code() != ErrorCode::kBoundaryAmbiguity) throw;
              o = OracleWithRetry(w, params);
            }
            if (o != i) out.push_back({w, i, o, ""});
          } catch (const Error& e) {
            out.push_back({w, i, std::nullopt, e.what()});
          }
        });
    for (OracleMismatch& m : bad) {
      report.oracle_mismatches.push_back(std::move(m));
    }
  }
}

bool InEpsilonA(std::int64_t i, int length, const Rational& eps) {
  const __int128 l2 = static_cast<__int128>(length) * length;
  return 4 * static_cast<__int128>(eps.den) * i >= (eps.den - 4 * eps.num) * l2;
}

bool InEpsilonB(int n, int length, const Rational& eps) {
  const __int128 d = length - 2 * n;
  if (d <= 0) return true;
  const __int128 l2 = static_cast<__int128>(length) * length;
  return eps.den * d * d <= 4 * eps.num * l2;
}

Rational ClosedFormClassCount(int length) {
  CheckLength(length, kMaxEnumerateLength);
  if (length == 1) return Rational::Of(8, 3);
  std::int64_t p = 8;
  for (int k = 2; k < length; ++k) p *= 3;
  return Rational::Of(p, length);
}

EpsilonReport EpsilonCensusOf(const std::vector<CensusRow>& rows, int length,
                              const Rational& eps) {
  CheckEpsilon(eps);
  EpsilonReport report;
  report.length = length;
  report.epsilon = eps;
  report.paper_total = ClosedFormClassCount(length);
  for (const CensusRow& row : rows) {
    ++report.total;
    if (InEpsilonA(row.i, length, eps)) ++report.count_a;
    if (InEpsilonB(row.n, length, eps)) ++report.count_b;
  }
  return report;
}

EpsilonReport EpsilonCensus(int length, const Rational& eps, int threads) {
  CheckLength(length, kMaxCensusLength);
  CheckEpsilon(eps);
  EnumerateOptions options;
  options.threads = threads;
  return EpsilonCensusOf(Census(length, options), length, eps);
}

std::vector<CyclicWord> MembershipConstruction(int length,
                                               const Rational& eps) {
  CheckLength(length, kMaxCensusLength);
  CheckEpsilon(eps);
  std::vector<CyclicWord> out;
  std::vector<Word> prefixes{Word{}};
  for (int len = 0; len + 2 <= length; ++len) {
    if (static_cast<__int128>(len) * eps.den >
        static_cast<__int128>(6) * eps.num * length) {
      break;
    }
    if ((length - len) % 2 == 0) {
      for (const Word& prefix : prefixes) {
        // Head in block shape: a-type first letter, b-type last letter.
        if (!prefix.empty() && (!IsATypeLetter(prefix.front()) ||
                                IsATypeLetter(prefix.back()))) {
          continue;
        }
        Word w = prefix;
        for (int t = 0; t < (length - len) / 2; ++t) {
          w.push_back(Letter::a);
          w.push_back(Letter::B);
        }
        if (IsCyclicallyReduced(w)) out.push_back(CanonicalRotation(w));
      }
    }
    std::vector<Word> longer;
    for (const Word& prefix : prefixes) {
      for (Letter x : kAllLetters) {
        if (!prefix.empty() && x == Inverse(prefix.back())) continue;
        Word w = prefix;
        w.push_back(x);
        longer.push_back(std::move(w));
      }
    }
    prefixes = std::move(longer);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassCounts CountClasses(int length, int threads) {
  CheckLength(length, kMaxCountLength);
  EnumerateOptions options;
  options.threads = threads;
  struct Tally {
    std::int64_t all = 0;
    std::int64_t primitive = 0;
    std::int64_t simple = 0;
  };
  std::vector<Tally> parts(1);
  std::mutex grow;
  ForEachPartition(length, options, [&](std::size_t k, auto&& run) {
    Tally local;
    run([&](const CyclicWord& w) {
      ++local.all;
      if (PrimitiveRoot(w).multiplicity == 1) ++local.primitive;
      if (SelfIntersection(w).i == 0) ++local.simple;
    });
    std::lock_guard<std::mutex> lock(grow);
    if (parts.size() <= k) parts.resize(k + 1);
    parts[k] = local;
  });
  ClassCounts counts;
  counts.length = length;
  counts.paper_formula = ClosedFormClassCount(length);
  for (const Tally& t : parts) {
    counts.all += t.all;
    counts.primitive += t.primitive;
    counts.simple += t.simple;
  }
  return counts;
}

}  // namespace pants
