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

#include "tphi/hyperfield.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "tphi/text_io.hpp"

namespace tphi {

namespace {

std::int64_t Narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorKind::kOverflow, "rational angle arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

__int128 Gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Turns Make128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Turns(Narrow(num), Narrow(den));
}

}  // namespace

Turns::Turns(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Turns Turns::operator+(const Turns& o) const {
  if (den_ == o.den_) return Make128(static_cast<__int128>(num_) + o.num_, den_);
  return Make128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
}

Turns Turns::operator-(const Turns& o) const { return *this + (-o); }

Turns Turns::Frac() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return Turns(r, den_);
}

std::strong_ordering Turns::operator<=>(const Turns& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string PhaseAngle::ToString() const {
  return std::to_string(num()) + "/" + std::to_string(den());
}

std::strong_ordering TPhiValue::operator<=>(const TPhiValue& o) const {
  if (is_zero() || o.is_zero()) return o.is_zero() <=> is_zero();
  return *angle_ <=> *o.angle_;
}

std::string TPhiValue::ToString() const { return is_zero() ? "0" : angle_->ToString(); }

TPhiValue TPhiValue::Parse(std::string_view text) {
  text = Trim(text);
  if (text == "0") return Zero();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorKind::kParse, "expected '0' or 'p/q', got '" + std::string(text) + "'");
  }
  std::int64_t p = ParseInt(text.substr(0, slash));
  std::int64_t q = ParseInt(text.substr(slash + 1));
  if (q <= 0) throw Error(ErrorKind::kParse, "denominator must be positive in '" + std::string(text) + "'");
  return Unit(p, q);
}

TPhiValue neg(const TPhiValue& v) {
  if (v.is_zero()) return v;
  return TPhiValue::Unit(v.angle().Antipode());
}

TPhiValue mul(const TPhiValue& a, const TPhiValue& b) {
  if (a.is_zero() || b.is_zero()) return TPhiValue::Zero();
  return TPhiValue::Unit(a.angle() + b.angle());
}

ArcSet ArcSet::ZeroOnly() {
  ArcSet s;
  s.contains_zero_ = true;
  return s;
}

ArcSet ArcSet::Point(const PhaseAngle& a) {
  ArcSet s;
  s.arcs_.push_back({a, Turns()});
  return s;
}

ArcSet ArcSet::Of(const TPhiValue& v) { return v.is_zero() ? ZeroOnly() : Point(v.angle()); }

ArcSet ArcSet::FullWithZero() {
  ArcSet s;
  s.contains_zero_ = true;
  s.full_circle_ = true;
  return s;
}

ArcSet ArcSet::FromArcs(bool contains_zero, std::vector<Arc> arcs) {
  ArcSet out;
  out.contains_zero_ = contains_zero;
  if (arcs.empty()) return out;

  // Lift each arc to [start, start + length] with start in [0, 1) and merge
  // on the line; afterwards only the last interval can reach past 1.
  struct Interval {
    Turns lo, hi;
  };
  std::vector<Interval> lifted;
  lifted.reserve(arcs.size());
  const Turns one = Turns::Integer(1);
  for (const Arc& a : arcs) {
    if (a.length >= one) {
      out.full_circle_ = true;
      return out;
    }
    lifted.push_back({a.start.turns(), a.start.turns() + a.length});
  }
  std::sort(lifted.begin(), lifted.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  std::vector<Interval> merged;
  for (const Interval& iv : lifted) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  // Wrap the tail interval around onto the head.
  while (merged.size() > 1 && merged.back().hi >= merged.front().lo + one) {
    merged.back().hi = std::max(merged.back().hi, merged.front().hi + one);
    merged.erase(merged.begin());
  }
  for (const Interval& iv : merged) {
    if (iv.hi - iv.lo >= one) {
      out.full_circle_ = true;
      return out;
    }
  }
  out.arcs_.reserve(merged.size());
  for (const Interval& iv : merged) out.arcs_.push_back({PhaseAngle(iv.lo), iv.hi - iv.lo});
  std::sort(out.arcs_.begin(), out.arcs_.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  return out;
}

bool ArcSet::Contains(const PhaseAngle& a) const {
  if (full_circle_) return true;
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& arc) { return arc.Contains(a); });
}

bool ArcSet::Contains(const TPhiValue& v) const {
  return v.is_zero() ? contains_zero_ : Contains(v.angle());
}

ArcSet ArcSet::Scaled(const TPhiValue& t) const {
  if (t.is_zero()) return empty() ? ArcSet() : ZeroOnly();
  ArcSet out = *this;
  for (Arc& a : out.arcs_) a.start = a.start + t.angle();
  std::sort(out.arcs_.begin(), out.arcs_.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  return out;
}

std::string ArcSet::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i > 0) out += ',';
    out += '[' + arcs_[i].start.ToString() + ',' + arcs_[i].end().ToString() + ']';
  }
  auto append = [&out](std::string_view token) {
    if (!out.empty()) out += ' ';
    out += token;
  };
  if (full_circle_) append("FULL");
  if (contains_zero_) append("+0");
  return out;
}

ArcSet ArcSet::Parse(std::string_view text) {
  bool zero = false;
  bool full = false;
  std::vector<Arc> arcs;
  for (std::string_view token : SplitWhitespace(text)) {
    if (token == "+0") {
      zero = true;
    } else if (token == "FULL") {
      full = true;
    } else {
      // [a,b],[c,d],...
      std::size_t pos = 0;
      while (pos < token.size()) {
        if (token[pos] == ',') {
          ++pos;
          continue;
        }
        if (token[pos] != '[') throw Error(ErrorKind::kParse, "bad arc list '" + std::string(token) + "'");
        std::size_t close = token.find(']', pos);
        if (close == std::string_view::npos) {
          throw Error(ErrorKind::kParse, "unterminated arc in '" + std::string(token) + "'");
        }
        std::string_view body = token.substr(pos + 1, close - pos - 1);
        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos) throw Error(ErrorKind::kParse, "arc needs two endpoints");
        TPhiValue lo = TPhiValue::Parse(body.substr(0, comma));
        TPhiValue hi = TPhiValue::Parse(body.substr(comma + 1));
        if (lo.is_zero() || hi.is_zero()) {
          throw Error(ErrorKind::kParse, "arc endpoints must be angles 'p/q'");
        }
        arcs.push_back({lo.angle(), (hi.angle() - lo.angle()).turns()});
        pos = close + 1;
      }
    }
  }
  if (full) {
    ArcSet s = FullWithZero();
    s.contains_zero_ = zero;
    return s;
  }
  return FromArcs(zero, std::move(arcs));
}

ArcSet boxplus_pair(const TPhiValue& a, const TPhiValue& b) { return boxplus(ArcSet::Of(a), b); }

ArcSet boxplus(const ArcSet& s, const TPhiValue& y) {
  if (y.is_zero()) return s;
  const PhaseAngle& base = y.angle();
  const PhaseAngle anti = base.Antipode();
  if (s.full_circle()) return ArcSet::FullWithZero();

  std::vector<Arc> out;
  out.reserve(s.arcs().size() + 1);
  if (s.contains_zero()) out.push_back({base, Turns()});
  const Turns half(1, 2);
  const Turns zero;
  for (const Arc& arc : s.arcs()) {
    if (arc.Contains(anti)) return ArcSet::FullWithZero();
    // In coordinates centred on y the arc sits inside (-1/2, 1/2); the union
    // of the short arcs from y to its points is the hull of the arc and 0.
    Turns lo = (arc.start - base).turns();
    if (lo > half) lo = lo - Turns::Integer(1);
    Turns hi = lo + arc.length;
    Turns from = std::min(lo, zero);
    Turns to = std::max(hi, zero);
    out.push_back({PhaseAngle(base.turns() + from), to - from});
  }
  return ArcSet::FromArcs(false, std::move(out));
}

ArcSet boxplus_fold(std::span<const TPhiValue> terms) {
  if (terms.empty()) throw Error(ErrorKind::kEmptySum, "hyperfield sum of no terms");
  ArcSet acc = ArcSet::Of(terms.front());
  for (const TPhiValue& t : terms.subspan(1)) acc = boxplus(acc, t);
  return acc;
}

bool contains_zero(std::span<const TPhiValue> terms) {
  if (terms.empty()) throw Error(ErrorKind::kEmptySum, "hyperfield sum of no terms");
  std::vector<PhaseAngle> angles;
  angles.reserve(terms.size());
  for (const TPhiValue& t : terms) {
    if (t.is_unit()) angles.push_back(t.angle());
  }
  if (angles.empty()) return true;
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  if (angles.size() == 1) return false;

  const Turns half(1, 2);
  for (const PhaseAngle& a : angles) {
    if (a.turns() >= half) break;
    if (std::binary_search(angles.begin(), angles.end(), a.Antipode())) return true;
  }
  Turns max_gap = angles.front().turns() + Turns::Integer(1) - angles.back().turns();
  for (std::size_t i = 1; i < angles.size(); ++i) {
    max_gap = std::max(max_gap, angles[i].turns() - angles[i - 1].turns());
  }
  return max_gap < half;
}

std::vector<TPhiValue> DiscreteValues(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "discretization order must be >= 1");
  std::vector<TPhiValue> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.push_back(TPhiValue::Zero());
  for (std::int64_t j = 0; j < k; ++j) out.push_back(TPhiValue::Root(j, k));
  return out;
}

}  // namespace tphi
