// Copyright 2026 The Authors.
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

// Exact arithmetic in the tropical phase hyperfield {0} u S^1.
//
// Points of S^1 are rational numbers of turns, so e^{2 pi i p/q} is stored as
// the reduced fraction p/q in [0, 1). Multiplication adds angles. Addition is
// multivalued and returns an ArcSet:
//
//   x + 0  = {x}
//   x + -x = {0} u S^1
//   x + y  = the closed arc of length < 1/2 joining x and y
//
// and extends to sets elementwise. All predicates are exact.

#ifndef TPHI_HYPERFIELD_HPP_
#define TPHI_HYPERFIELD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tphi/error.hpp"

namespace tphi {

// Exact rational number with a positive denominator, always reduced.
class Turns {
 public:
  constexpr Turns() = default;
  Turns(std::int64_t num, std::int64_t den);
  static Turns Integer(std::int64_t n) { return Turns(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Turns operator+(const Turns& o) const;
  Turns operator-(const Turns& o) const;
  Turns operator-() const { return Turns(-num_, den_); }

  // Representative of *this modulo 1 in [0, 1).
  Turns Frac() const;

  bool operator==(const Turns& o) const = default;
  std::strong_ordering operator<=>(const Turns& o) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A point of S^1 in canonical reduced form, 0 <= num < den.
class PhaseAngle {
 public:
  constexpr PhaseAngle() = default;
  PhaseAngle(std::int64_t num, std::int64_t den) : t_(Turns(num, den).Frac()) {}
  explicit PhaseAngle(const Turns& t) : t_(t.Frac()) {}

  std::int64_t num() const { return t_.num(); }
  std::int64_t den() const { return t_.den(); }
  const Turns& turns() const { return t_; }

  PhaseAngle operator+(const PhaseAngle& o) const { return PhaseAngle(t_ + o.t_); }
  PhaseAngle operator-(const PhaseAngle& o) const { return PhaseAngle(t_ - o.t_); }
  PhaseAngle operator-() const { return PhaseAngle(-t_); }
  PhaseAngle Antipode() const { return PhaseAngle(t_ + Turns(1, 2)); }

  bool operator==(const PhaseAngle& o) const = default;
  auto operator<=>(const PhaseAngle& o) const { return t_ <=> o.t_; }

  // "p/q"; angle zero prints as "0/1".
  std::string ToString() const;

 private:
  Turns t_;
};

// An element of the hyperfield: Zero or a unit on S^1. Zero sorts first,
// then units by angle.
class TPhiValue {
 public:
  constexpr TPhiValue() = default;
  static TPhiValue Zero() { return TPhiValue(); }
  static TPhiValue Unit(PhaseAngle a) { return TPhiValue(a); }
  static TPhiValue Unit(std::int64_t num, std::int64_t den) {
    return TPhiValue(PhaseAngle(num, den));
  }
  // The k-th roots of unity e^{2 pi i j / k}.
  static TPhiValue Root(std::int64_t j, std::int64_t k) { return Unit(j, k); }

  bool is_zero() const { return !angle_.has_value(); }
  bool is_unit() const { return angle_.has_value(); }
  // Requires is_unit().
  const PhaseAngle& angle() const { return *angle_; }

  // Inverse of a unit. Requires is_unit().
  TPhiValue Inverse() const { return Unit(-*angle_); }

  bool operator==(const TPhiValue& o) const = default;
  std::strong_ordering operator<=>(const TPhiValue& o) const;

  // "0" for Zero, "p/q" for units.
  std::string ToString() const;
  static TPhiValue Parse(std::string_view text);

 private:
  explicit TPhiValue(PhaseAngle a) : angle_(a) {}
  std::optional<PhaseAngle> angle_;
};

TPhiValue neg(const TPhiValue& v);
TPhiValue mul(const TPhiValue& a, const TPhiValue& b);
inline TPhiValue operator-(const TPhiValue& v) { return neg(v); }
inline TPhiValue operator*(const TPhiValue& a, const TPhiValue& b) { return mul(a, b); }

// Closed arc from `start` counterclockwise for `length` turns, 0 <= length < 1.
// A length-zero arc is a single point.
struct Arc {
  PhaseAngle start;
  Turns length;

  PhaseAngle end() const { return PhaseAngle(start.turns() + length); }
  bool Contains(const PhaseAngle& a) const { return (a - start).turns() <= length; }

  bool operator==(const Arc& o) const = default;
};

// A subset of {0} u S^1: an optional zero together with a finite union of
// closed arcs, or the whole circle. Canonical: arcs are disjoint, do not
// touch, are sorted by start and each shorter than a full turn; a union that
// covers S^1 becomes full_circle with no arcs. Equal sets compare equal.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet ZeroOnly();
  static ArcSet Point(const PhaseAngle& a);
  static ArcSet Of(const TPhiValue& v);
  static ArcSet FullWithZero();
  static ArcSet FromArcs(bool contains_zero, std::vector<Arc> arcs);

  bool contains_zero() const { return contains_zero_; }
  bool full_circle() const { return full_circle_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return !contains_zero_ && !full_circle_ && arcs_.empty(); }

  bool Contains(const TPhiValue& v) const;
  bool Contains(const PhaseAngle& a) const;

  // Pointwise product {t * s : s in this}.
  ArcSet Scaled(const TPhiValue& t) const;
  ArcSet Negated() const { return Scaled(TPhiValue::Unit(1, 2)); }

  bool operator==(const ArcSet& o) const = default;

  // Arcs as "[p/q,p'/q']" joined by commas, then "FULL" and "+0" markers,
  // separated by single spaces. {0} alone prints as "+0".
  std::string ToString() const;
  static ArcSet Parse(std::string_view text);

 private:
  bool contains_zero_ = false;
  bool full_circle_ = false;
  std::vector<Arc> arcs_;
};

ArcSet boxplus_pair(const TPhiValue& a, const TPhiValue& b);

// S (+) {y}: the union of s (+) y over s in S.
ArcSet boxplus(const ArcSet& s, const TPhiValue& y);

// Left fold of (+) over the terms in the order given.
// Throws Error(kEmptySum) on an empty list.
ArcSet boxplus_fold(std::span<const TPhiValue> terms);

// Whether 0 lies in the sum of the terms, decided without building the sum:
// after dropping zeros and duplicates, 0 is reached iff two terms are
// antipodal or no open semicircle contains every term.
// Throws Error(kEmptySum) on an empty list.
bool contains_zero(std::span<const TPhiValue> terms);

// The k-th roots of unity together with Zero, Zero first.
std::vector<TPhiValue> DiscreteValues(std::int64_t k);

}  // namespace tphi

#endif  // TPHI_HYPERFIELD_HPP_
