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

#include "pants/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "pants/error.h"

namespace pants {
namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr std::array<Letter, 4> kSlotLetters = {Letter::a, Letter::B,
                                                Letter::b, Letter::A};

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfiguration, what);
}

Real Angle(Complex z) {
  Real t = std::arg(z);
  if (t < 0) t += 2 * kPi;
  return t;
}

Real Cross(Complex x, Complex y) {
  return x.real() * y.imag() - x.imag() * y.real();
}

// Disk automorphism taking the geodesic from u1 to u2 onto the real
// diameter, u1 to -1 and u2 to +1.
Mobius StraighteningMap(Complex u1, Complex u2) {
  Complex u3 = -(u1 + u2);
  u3 = std::abs(u3) > 1e-6L ? u3 / std::abs(u3) : Complex(0, 1) * u1;
  const Mobius to_half{1, -u1, 1, -u2};
  const Complex t3 = to_half.Apply(u3);
  Complex rot = std::abs(t3) / t3;
  if ((rot * to_half.Apply(0)).imag() < 0) rot = -rot;
  const Mobius half{rot, -rot * u1, 1, -u2};
  const Mobius cayley{1, Complex(0, -1), 1, Complex(0, 1)};
  return (cayley * half).Normalized();
}

// Where the geodesic circle of `disk` crosses the real diameter, after
// `phi` has straightened the common perpendicular.
Real PerpendicularCrossing(const HalfDisk& disk, const Mobius& phi) {
  const Complex dir = disk.center / std::abs(disk.center);
  const Complex v =
      phi.Apply(dir * std::polar(Real{1}, disk.arc_half_width));
  return v.real() / (1 + std::abs(v.imag()));
}

Mobius PairingGenerator(const HalfDisk& from, const HalfDisk& to) {
  const Complex c1 = from.center;
  const Complex c2 = to.center;
  const Real det = Cross(c1, c2);
  Complex u1;
  Complex u2;
  if (std::abs(det) < 1e-12L) {
    u1 = c1 / std::abs(c1);
    u2 = c2 / std::abs(c2);
  } else {
    const Complex x((c2.imag() - c1.imag()) / det,
                    (c1.real() - c2.real()) / det);
    const Real phase = std::arg(x);
    const Real spread = std::acos(1 / std::abs(x));
    u1 = std::polar(Real{1}, phase - spread);
    u2 = std::polar(Real{1}, phase + spread);
    if (std::abs(u1 - c1) > std::abs(u2 - c1)) std::swap(u1, u2);
  }
  const Mobius phi = StraighteningMap(u1, u2);
  const Real x1 = PerpendicularCrossing(from, phi);
  const Real x2 = PerpendicularCrossing(to, phi);
  const Real t = (x2 - x1) / (1 - x1 * x2);
  const Mobius translate{1, t, t, 1};
  return (phi.Inverse() * translate * phi).Normalized();
}

void CheckPairing(const SchottkyConfig& cfg, Letter e) {
  const HalfDisk& from = cfg.disk(Inverse(e));
  const HalfDisk& to = cfg.disk(e);
  const Mobius& g = cfg.generator(e);
  for (int k = 0; k < 16; ++k) {
    const Complex z =
        from.center + std::polar(from.radius, 2 * kPi * k / Real{16});
    const Real miss = std::abs(std::abs(g.Apply(z) - to.center) - to.radius);
    if (!(miss < 1e-9L)) {
      Invalid(std::string("generator ") + ToChar(e) +
              " does not pair its circles");
    }
  }
  if (!(std::abs(g.Apply(0) - to.center) < to.radius)) {
    Invalid(std::string("generator ") + ToChar(e) +
            " does not map the origin into its half-disk");
  }
}

}  // namespace

ConfigParams DefaultConfigParams() { return {}; }

Letter SlotLetter(int slot) { return kSlotLetters.at(slot); }

Mobius SchottkyConfig::WordMatrix(std::span<const Letter> w) const {
  Mobius m = Mobius::Identity();
  for (Letter x : w) m = (m * generator(x)).Normalized();
  return m;
}

bool SchottkyConfig::OnArc(Letter x, Complex u, Real tol) const {
  const HalfDisk& d = disk(x);
  Real delta = std::abs(Angle(u) - d.angle);
  delta = std::min(delta, 2 * kPi - delta);
  return delta <= d.arc_half_width + tol;
}

SchottkyConfig BuildConfig(const ConfigParams& params) {
  SchottkyConfig cfg;
  cfg.params_ = params;
  for (int slot = 0; slot < 4; ++slot) {
    const double deg = params.angles_deg[slot];
    const double r = params.radii[slot];
    if (!std::isfinite(deg) || !std::isfinite(r) || r <= 0) {
      Invalid("angles must be finite and radii positive");
    }
    if (deg <= 0 || deg >= 360) Invalid("angles must lie in (0, 360)");
    if (slot > 0 && !(deg > params.angles_deg[slot - 1])) {
      Invalid("arc order must be a, B, b, A anticlockwise from I");
    }
    HalfDisk& d = cfg.disks_[LetterIndex(kSlotLetters[slot])];
    d.letter = kSlotLetters[slot];
    d.angle = static_cast<Real>(deg) * kPi / 180;
    d.radius = r;
    d.center = std::polar(std::sqrt(1 + d.radius * d.radius), d.angle);
    d.arc_half_width = std::atan(d.radius);
  }
  const HalfDisk& first = cfg.disk(kSlotLetters[0]);
  const HalfDisk& last = cfg.disk(kSlotLetters[3]);
  if (first.angle - first.arc_half_width <= 0 ||
      last.angle + last.arc_half_width >= 2 * kPi) {
    Invalid("reference point I lies in a half-disk");
  }
  for (int s = 0; s < 4; ++s) {
    for (int t = s + 1; t < 4; ++t) {
      const HalfDisk& x = cfg.disk(kSlotLetters[s]);
      const HalfDisk& y = cfg.disk(kSlotLetters[t]);
      if (std::abs(x.center - y.center) <= x.radius + y.radius) {
        Invalid(std::string("half-disks ") + ToChar(x.letter) + " and " +
                ToChar(y.letter) + " overlap");
      }
    }
  }
  for (Letter e : {Letter::a, Letter::b}) {
    const Mobius g = PairingGenerator(cfg.disk(Inverse(e)), cfg.disk(e));
    cfg.gens_[LetterIndex(e)] = g;
    cfg.gens_[LetterIndex(Inverse(e))] = g.Inverse();
  }
  for (Letter e : kAllLetters) CheckPairing(cfg, e);
  return cfg;
}

FixedPointPair FixedPoints(std::span<const Letter> w,
                           const SchottkyConfig& cfg) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyInput, "fixed points of the empty word");
  }
  const Mobius m = cfg.WordMatrix(w);
  const Complex tr = m.Trace();
  if (!(std::abs(tr) > 2 + 1e-9L) || std::abs(m.c) < 1e-300L) {
    throw Error(ErrorCode::kNumericalDegeneracy,
                "word matrix of '" + ToString(w) + "' is not hyperbolic");
  }
  const Complex disc = std::sqrt(tr * tr - Real{4});
  const Complex z1 = (m.a - m.d + disc) / (Real{2} * m.c);
  const Complex z2 = (m.a - m.d - disc) / (Real{2} * m.c);
  FixedPointPair out =
      std::abs(m.c * z1 + m.d) > 1 ? FixedPointPair{z1, z2}
                                   : FixedPointPair{z2, z1};
  if (!cfg.OnArc(w.front(), out.attracting)) {
    throw Error(ErrorCode::kNumericalDegeneracy,
                "attracting point of '" + ToString(w) +
                    "' is off the arc of its first letter");
  }
  return out;
}

std::vector<FixedPointPair> ShiftAxes(std::span<const Letter> w,
                                      const SchottkyConfig& cfg) {
  std::vector<FixedPointPair> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    out.push_back(FixedPoints(Rotate(w, k), cfg));
  }
  return out;
}

bool NumericLinked(const FixedPointPair& g, const FixedPointPair& h) {
  for (Complex x : {g.attracting, g.repelling}) {
    for (Complex y : {h.attracting, h.repelling}) {
      if (std::abs(x - y) < 1e-12L) return false;
    }
  }
  const Real ta = Angle(g.attracting);
  const Real tr = Angle(g.repelling);
  const Real lo = std::min(ta, tr);
  const Real hi = std::max(ta, tr);
  auto between = [lo, hi](Complex z) {
    const Real t = Angle(z);
    return lo < t && t < hi;
  };
  return between(h.attracting) != between(h.repelling);
}

Complex GeodesicIntersection(const FixedPointPair& g,
                             const FixedPointPair& h) {
  // Chords in the Klein model, then back to the Poincare disk.
  const Complex p = g.repelling;
  const Complex r = g.attracting - g.repelling;
  const Complex q = h.repelling;
  const Complex s = h.attracting - h.repelling;
  const Real den = Cross(r, s);
  if (std::abs(den) < 1e-300L) {
    throw Error(ErrorCode::kNumericalDegeneracy, "parallel axes");
  }
  const Complex k = p + (Cross(q - p, s) / den) * r;
  return k / (1 + std::sqrt(std::max(Real{0}, 1 - std::norm(k))));
}

DomainReduction ReduceToDomain(Complex z, const SchottkyConfig& cfg,
                               Real boundary_tol, int max_steps) {
  DomainReduction out{z, {}, Mobius::Identity()};
  auto apply = [&](Letter x) {
    const Mobius& g = cfg.generator(x);
    out.point = g.Apply(out.point);
    out.map = (g * out.map).Normalized();
    out.applied.push_back(x);
  };
  for (int step = 0;; ++step) {
    bool moved = false;
    for (Letter x : kAllLetters) {
      const HalfDisk& d = cfg.disk(x);
      if (std::abs(out.point - d.center) < d.radius - boundary_tol) {
        if (step >= max_steps) {
          throw Error(ErrorCode::kBoundaryAmbiguity,
                      "domain reduction did not terminate");
        }
        apply(Inverse(x));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  for (Letter x : {Letter::A, Letter::B}) {
    const HalfDisk& d = cfg.disk(x);
    if (std::abs(std::abs(out.point - d.center) - d.radius) < boundary_tol) {
      apply(Inverse(x));
    }
  }
  return out;
}

bool InFundamentalDomain(Complex z, const SchottkyConfig& cfg, Real tol) {
  if (!(std::abs(z) < 1)) return false;
  for (Letter x : kAllLetters) {
    const HalfDisk& d = cfg.disk(x);
    if (std::abs(z - d.center) < d.radius - tol) return false;
  }
  return true;
}

std::int64_t OracleSelfIntersection(const CyclicWord& w,
                                    const SchottkyConfig& cfg,
                                    const OracleOptions& options) {
  const PrimitiveDecomposition prim = PrimitiveRoot(w);
  const Word& root = prim.root.letters();
  const std::vector<FixedPointPair> axes = ShiftAxes(root, cfg);
  const int length = static_cast<int>(axes.size());

  auto identify = [&](const FixedPointPair& axis, const Mobius& g) {
    const Complex att = g.Apply(axis.attracting);
    const Complex rep = g.Apply(axis.repelling);
    for (int k = 0; k < length; ++k) {
      if (std::abs(axes[k].attracting - att) < options.match_tol &&
          std::abs(axes[k].repelling - rep) < options.match_tol) {
        return k;
      }
    }
    throw Error(ErrorCode::kBoundaryAmbiguity,
                "image lift not found for '" + prim.root.str() + "'");
  };

  struct Key {
    Complex point;
    std::pair<int, int> lifts;
  };
  std::vector<Key> keys;
  for (int s = 0; s < length; ++s) {
    for (int t = s + 1; t < length; ++t) {
      if (!NumericLinked(axes[s], axes[t])) continue;
      const DomainReduction red =
          ReduceToDomain(GeodesicIntersection(axes[s], axes[t]), cfg,
                         options.boundary_tol, options.max_steps);
      const int u = identify(axes[s], red.map);
      const int v = identify(axes[t], red.map);
      const Key key{red.point, {std::min(u, v), std::max(u, v)}};
      const bool seen = std::any_of(keys.begin(), keys.end(), [&](const Key& k) {
        return k.lifts == key.lifts &&
               std::abs(k.point - key.point) < options.dedupe_tol;
      });
      if (!seen) keys.push_back(key);
    }
  }
  const std::int64_t m = prim.multiplicity;
  return m * m * static_cast<std::int64_t>(keys.size());
}

std::int64_t OracleWithRetry(const CyclicWord& w, const ConfigParams& params,
                             const OracleOptions& options, int retries) {
  ConfigParams current = params;
  for (int attempt = 0;; ++attempt) {
    try {
      return OracleSelfIntersection(w, BuildConfig(current), options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBoundaryAmbiguity || attempt >= retries) {
        throw;
      }
    }
    for (double& r : current.radii) r *= 1.01;
  }
}

}  // namespace pants
