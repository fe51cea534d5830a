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

#include <cstdlib>
#include <utility>
#include <variant>

#include "pants/error.h"

namespace pants {
namespace {

// s^i and t^e as letter-with-exponent pairs.
bool SamePower(Letter s, int i, Letter t, int e) { return s == t && i == e; }

std::string SetLabel(const char* family, int k) {
  return std::string(family) + "_" + std::to_string(k + 1);
}

}  // namespace

GeodesicLift AlphaLift(const BlockForm& form, int k, int m) {
  const Word w = form.word();
  return MakeLift(Rotate(w, static_cast<std::size_t>(form.BlockStart(k) + m)),
                  {LiftKind::kAlpha, k + 1, m});
}

GeodesicLift BetaLift(const BlockForm& form, int k, int p) {
  const Word w = form.word();
  const int start = form.BlockStart(k) + form.blocks[k].i + p;
  return MakeLift(Rotate(w, static_cast<std::size_t>(start)),
                  {LiftKind::kBeta, k + 1, p});
}

std::vector<GeodesicLift> Lifts(const BlockForm& form) {
  std::vector<GeodesicLift> out;
  out.reserve(static_cast<std::size_t>(form.length));
  for (int k = 0; k < form.n(); ++k) {
    for (int m = 0; m < form.blocks[k].i; ++m) {
      out.push_back(AlphaLift(form, k, m));
    }
    for (int p = 0; p < form.blocks[k].j; ++p) {
      out.push_back(BetaLift(form, k, p));
    }
  }
  return out;
}

HBreakdown ComputeH(const BlockForm& form) {
  const CyclicWord cyclic = CanonicalRotation(form.word());
  if (PrimitiveRoot(cyclic).multiplicity != 1) {
    throw Error(ErrorCode::kNonPrimitiveInput,
                "H is defined on primitive words; '" + cyclic.str() +
                    "' is a proper power");
  }
  const int n = form.n();
  std::vector<GeodesicLift> alpha;
  std::vector<GeodesicLift> beta;
  for (int k = 0; k < n; ++k) {
    alpha.push_back(AlphaLift(form, k, 0));
    beta.push_back(BetaLift(form, k, 0));
  }
  const auto& b = form.blocks;
  HBreakdown out;
  for (int k = 0; k < n; ++k) {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    for (int l = k + 1; l < n; ++l) {
      if (!SamePower(b[k].s, b[k].i, b[l].s, b[l].i) &&
          Linked(alpha[k], alpha[l])) {
        ++c1;
      }
      if (!SamePower(b[k].s, b[k].i, Inverse(b[l].s), b[l].i) &&
          Linked(beta[k], alpha[l])) {
        ++c2;
      }
      if (!SamePower(b[k].r, b[k].j, b[l].r, b[l].j) &&
          Linked(beta[k], beta[l])) {
        ++d1;
      }
    }
    for (int l = k; l < n; ++l) {
      // D^2_1 carries no letter condition.
      const bool admissible =
          k == 0 ||
          !SamePower(b[k - 1].r, b[k - 1].j, Inverse(b[l].r), b[l].j);
      if (admissible && Linked(alpha[k], beta[l])) ++d2;
    }
    out.set_counts[SetLabel("C1", k)] = c1;
    out.set_counts[SetLabel("C2", k)] = c2;
    out.set_counts[SetLabel("D1", k)] = d1;
    out.set_counts[SetLabel("D2", k)] = d2;
    out.h += c1 + c2 + d1 + d2;
  }
  return out;
}

std::int64_t ClosedFormTerm(const BlockForm& form) {
  const std::int64_t n = form.n();
  std::int64_t spread = 0;
  for (int k = 0; k < form.n(); ++k) {
    for (int l = k + 1; l < form.n(); ++l) {
      spread += std::abs(form.blocks[k].i - form.blocks[l].i) +
                std::abs(form.blocks[k].j - form.blocks[l].j);
    }
  }
  return n * form.length - 2 * n * n - spread;
}

TheoremBounds ParityBounds(std::int64_t length) {
  TheoremBounds out;
  if (length % 2 == 0) {
    out.parity_lower = length / 2 - 1;
    out.parity_upper = length * length / 4;
  } else {
    out.parity_lower = (length - 1) / 2;
    out.parity_upper = (length * length - 1) / 4;
  }
  return out;
}

TheoremBounds Bounds(const BlockForm& form, std::int64_t length) {
  TheoremBounds out = ParityBounds(length);
  const std::int64_t n = form.n();
  out.lower = length - n - 1;
  out.upper = n * length - n * n;
  return out;
}

IntersectionReport SelfIntersection(const CyclicWord& w) {
  PrimitiveDecomposition prim = PrimitiveRoot(w);
  IntersectionReport report{
      w, prim.root, prim.multiplicity, 0, 0, 0, {}, 0, 0, 0, 0, 0, 0, false};
  report.length = static_cast<int>(w.size());
  const TheoremBounds parity = ParityBounds(report.length);
  report.parity_lower = parity.parity_lower;
  report.parity_upper = parity.parity_upper;

  auto decomposition = DecomposeBlocks(prim.root);
  if (std::holds_alternative<SimplePower>(decomposition)) {
    report.simple_power = true;
    return report;
  }
  const BlockForm& form = std::get<BlockForm>(decomposition);
  const std::int64_t m2 =
      static_cast<std::int64_t>(prim.multiplicity) * prim.multiplicity;
  HBreakdown h = ComputeH(form);
  report.n = form.n();
  report.h = h.h;
  report.set_counts = std::move(h.set_counts);
  report.closed_form = ClosedFormTerm(form);
  report.i = m2 * (report.h + report.closed_form);
  const TheoremBounds root_bounds = Bounds(form, form.length);
  report.lower_bound = m2 * root_bounds.lower;
  report.upper_bound = m2 * root_bounds.upper;
  return report;
}

IntersectionReport SelfIntersection(std::string_view text) {
  return SelfIntersection(CyclicWord::FromText(text));
}

}  // namespace pants
