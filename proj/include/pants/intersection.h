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

#ifndef PANTS_INTERSECTION_H_
#define PANTS_INTERSECTION_H_

// Exact self-intersection numbers of closed geodesics on the pair of pants.
//
// A primitive word in block form s_1^{i_1} r_1^{j_1} ... s_n^{i_n} r_n^{j_n}
// of length L has
//
//   i = H + n L - 2 n^2 - sum_{k<l} (|i_k - i_l| + |j_k - j_l|),
//
// where H counts the linked "corner" pairs among the lifts alpha_{k,0} and
// beta_{k,0} that fall in the sets C^1_k, C^2_k, D^1_k, D^2_k. A proper power
// w = w_0^m scales as i(w) = m^2 i(w_0).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pants/boundary_order.h"
#include "pants/word.h"

namespace pants {

// alpha_{k,m}: attracting period s_k^{i_k - m} r_k^{j_k} ... s_k^{m}.
// `k` is zero-based, 0 <= m < i_k.
GeodesicLift AlphaLift(const BlockForm& form, int k, int m);

// beta_{k,p}: attracting period r_k^{j_k - p} s_{k+1}^{i_{k+1}} ... r_k^{p}.
// `k` is zero-based, 0 <= p < j_k.
GeodesicLift BetaLift(const BlockForm& form, int k, int p);

// All L lifts crossing the fundamental domain, alpha_{k,*} then beta_{k,*}
// for each block in turn.
std::vector<GeodesicLift> Lifts(const BlockForm& form);

struct HBreakdown {
  std::int64_t h = 0;
  // Keys "C1_k", "C2_k", "D1_k", "D2_k" with one-based k.
  std::map<std::string, std::int64_t> set_counts;
};

// Throws Error(kNonPrimitiveInput) if the block word is a proper power.
HBreakdown ComputeH(const BlockForm& form);

// n L - 2 n^2 - sum_{k<l} (|i_k - i_l| + |j_k - j_l|).
std::int64_t ClosedFormTerm(const BlockForm& form);

struct TheoremBounds {
  std::int64_t lower = 0;         // L - n - 1
  std::int64_t upper = 0;         // n L - n^2
  std::int64_t parity_lower = 0;  // L/2 - 1 or (L-1)/2
  std::int64_t parity_upper = 0;  // L^2/4 or (L^2-1)/4
};

TheoremBounds Bounds(const BlockForm& form, std::int64_t length);

// Parity bounds only depend on the length.
TheoremBounds ParityBounds(std::int64_t length);

struct IntersectionReport {
  CyclicWord word;
  CyclicWord root;
  int multiplicity = 1;
  int n = 0;       // blocks of the root; 0 for a boundary power
  int length = 0;  // letters of `word`
  std::int64_t h = 0;
  std::map<std::string, std::int64_t> set_counts;
  std::int64_t closed_form = 0;
  std::int64_t i = 0;
  // Length bounds for the root, scaled by multiplicity^2.
  std::int64_t lower_bound = 0;
  std::int64_t upper_bound = 0;
  std::int64_t parity_lower = 0;
  std::int64_t parity_upper = 0;
  bool simple_power = false;

  bool simple() const { return i == 0; }
};

IntersectionReport SelfIntersection(const CyclicWord& w);

// Parses, cyclically reduces and canonicalizes first.
IntersectionReport SelfIntersection(std::string_view text);

}  // namespace pants

#endif  // PANTS_INTERSECTION_H_
