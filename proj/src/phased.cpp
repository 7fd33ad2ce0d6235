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

#include "tphi/phased.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tphi/text_io.hpp"

namespace tphi {

namespace {

std::string TupleString(std::span<const int> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

// (k+1)^n, or nullopt when it exceeds `limit`.
std::optional<std::uint64_t> PowerWithin(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (acc > limit / base) return std::nullopt;
    acc *= base;
  }
  return acc <= limit ? std::optional(acc) : std::nullopt;
}

// Digits of `index` in base k+1, most significant first; digit 0 is Zero and
// digit d is the root (d-1)/k, which makes index order the lexicographic order.
PhasedVector DecodeCandidate(std::uint64_t index, std::size_t n, std::int64_t k) {
  std::vector<TPhiValue> entries(n);
  const std::uint64_t base = static_cast<std::uint64_t>(k) + 1;
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t digit = index % base;
    index /= base;
    entries[i] = digit == 0 ? TPhiValue::Zero()
                            : TPhiValue::Root(static_cast<std::int64_t>(digit) - 1, k);
  }
  return PhasedVector(std::move(entries));
}

void NextLex(std::vector<int>& t, int n) {
  // Advance an arbitrary tuple over [n]^r; returns with t[0] == n+1 when done.
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < n) {
      ++t[i];
      return;
    }
    if (i == 0) {
      t[0] = n + 1;
      return;
    }
    t[i] = 1;
  }
}

bool AllDistinct(std::span<const int> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
    }
  }
  return true;
}

std::vector<Tuple> AllTuples(int n, int r, bool distinct_only) {
  std::vector<Tuple> out;
  if (r == 0) return {Tuple{}};
  Tuple t(static_cast<std::size_t>(r), 1);
  while (t[0] <= n) {
    if (!distinct_only || AllDistinct(t)) out.push_back(t);
    NextLex(t, n);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> PhasedVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].is_unit()) out.push_back(i);
  }
  return out;
}

std::size_t PhasedVector::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const TPhiValue& v) { return v.is_unit(); }));
}

PhasedVector PhasedVector::Scaled(const TPhiValue& t) const {
  std::vector<TPhiValue> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = t * entries_[i];
  return PhasedVector(std::move(out));
}

bool PhasedVector::LessEq(const PhasedVector& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].is_unit() && entries_[i] != other.entries_[i]) return false;
  }
  return true;
}

std::string PhasedVector::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += entries_[i].ToString();
  }
  return out;
}

PhasedVector PhasedVector::Parse(std::string_view text) {
  std::vector<TPhiValue> entries;
  for (std::string_view field : Split(Trim(text), ',')) entries.push_back(TPhiValue::Parse(field));
  return PhasedVector(std::move(entries));
}

bool perp_membership(std::span<const PhasedVector> vs, const PhasedVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::kZeroVector, "x must have non-empty support");
  std::vector<TPhiValue> terms(x.size());
  for (const PhasedVector& v : vs) {
    if (v.size() != x.size()) {
      throw Error(ErrorKind::kLengthMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " against length " + std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) terms[i] = v[i] * x[i];
    if (!contains_zero(terms)) return false;
  }
  return true;
}

std::vector<PhasedVector> perp_enumerate(std::span<const PhasedVector> vs, std::int64_t k, Exec exec,
                                         std::size_t cap) {
  if (k <= 0 || k % 2 != 0) {
    throw Error(ErrorKind::kOddDiscretization, "k = " + std::to_string(k) + " must be even and positive");
  }
  if (vs.empty()) throw Error(ErrorKind::kInvalidArgument, "perp of an empty vector list");
  const std::size_t n = vs.front().size();
  for (const PhasedVector& v : vs) {
    if (v.size() != n) throw Error(ErrorKind::kLengthMismatch, "vectors differ in length");
  }
  auto total = PowerWithin(static_cast<std::uint64_t>(k) + 1, n, cap);
  if (!total) {
    throw Error(ErrorKind::kSizeCapExceeded,
                "(k+1)^n candidates exceed the cap of " + std::to_string(cap));
  }

  const auto count = static_cast<std::int64_t>(*total);
  std::vector<char> keep(static_cast<std::size_t>(count), 0);
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (std::int64_t idx = 1; idx < count; ++idx) {
    keep[static_cast<std::size_t>(idx)] =
        perp_membership(vs, DecodeCandidate(static_cast<std::uint64_t>(idx), n, k)) ? 1 : 0;
  }

  std::vector<PhasedVector> out;
  for (std::int64_t idx = 1; idx < count; ++idx) {
    if (keep[static_cast<std::size_t>(idx)]) out.push_back(DecodeCandidate(static_cast<std::uint64_t>(idx), n, k));
  }
  return out;
}

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Tuple> IncreasingTuples(int n, int r) {
  std::vector<Tuple> out;
  if (r < 0 || r > n) return out;
  Tuple t(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(t);
    int i = r - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

GPFunction::GPFunction(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 1 || r > n) {
    throw Error(ErrorKind::kInvalidArgument, "need 1 <= r <= n, got n=" + std::to_string(n) +
                                                 " r=" + std::to_string(r));
  }
  std::uint64_t size = Binomial(n, r);
  if (size > kDefaultCap) throw Error(ErrorKind::kSizeCapExceeded, "C(n,r) too large");
  values_.assign(static_cast<std::size_t>(size), TPhiValue::Zero());
}

GPFunction::GPFunction(int n, int r, std::vector<TPhiValue> values) : GPFunction(n, r) {
  if (values.size() != values_.size()) {
    throw Error(ErrorKind::kLengthMismatch, "expected " + std::to_string(values_.size()) + " values");
  }
  values_ = std::move(values);
}

std::size_t GPFunction::IndexOf(std::span<const int> t) const {
  if (t.size() != static_cast<std::size_t>(r_)) {
    throw Error(ErrorKind::kBadArity, "tuple " + TupleString(t) + " is not of length " + std::to_string(r_));
  }
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < r_; ++i) {
    int c = t[static_cast<std::size_t>(i)];
    if (c <= prev || c > n_) {
      throw Error(ErrorKind::kIndexOutOfRange, "tuple " + TupleString(t) + " is not increasing within [n]");
    }
    for (int j = prev + 1; j < c; ++j) rank += Binomial(n_ - j, r_ - i - 1);
    prev = c;
  }
  return static_cast<std::size_t>(rank);
}

bool GPFunction::IsIdenticallyZero() const {
  return std::all_of(values_.begin(), values_.end(), [](const TPhiValue& v) { return v.is_zero(); });
}

GPFunction GPFunction::Scaled(const TPhiValue& t) const {
  GPFunction out = *this;
  for (TPhiValue& v : out.values_) v = t * v;
  return out;
}

std::string GPFunction::ToFileText() const {
  std::ostringstream os;
  os << n_ << ' ' << r_ << '\n';
  auto tuples = IncreasingTuples(n_, r_);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (values_[i].is_zero()) continue;
    for (int e : tuples[i]) os << e << ' ';
    os << ": " << values_[i].ToString() << '\n';
  }
  return os.str();
}

std::string GPFunction::ToCompactString() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += values_[i].ToString();
  }
  return out;
}

GPFunction GPFunction::Parse(std::istream& in) {
  auto lines = ReadContentLines(in);
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty GP function file");
  auto header = SplitWhitespace(lines.front().text);
  if (header.size() != 2) throw Error(ErrorKind::kParse, "line " + std::to_string(lines.front().number) + ": expected 'n r'");
  GPFunction phi(static_cast<int>(ParseInt(header[0])), static_cast<int>(ParseInt(header[1])));
  std::vector<char> seen(phi.size(), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const SourceLine& line = lines[li];
    auto colon = line.text.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line.number) + ": expected 'i1 ... ir : v'");
    }
    Tuple t;
    for (std::string_view tok : SplitWhitespace(std::string_view(line.text).substr(0, colon))) {
      t.push_back(static_cast<int>(ParseInt(tok)));
    }
    std::size_t idx = phi.IndexOf(t);
    if (seen[idx]) throw Error(ErrorKind::kParse, "line " + std::to_string(line.number) + ": duplicate tuple");
    seen[idx] = 1;
    phi.values_[idx] = TPhiValue::Parse(std::string_view(line.text).substr(colon + 1));
  }
  return phi;
}

TPhiValue gp_eval(const GPFunction& phi, std::span<const int> tuple) {
  if (tuple.size() != static_cast<std::size_t>(phi.r())) {
    throw Error(ErrorKind::kBadArity, "tuple " + TupleString(tuple) + " is not of length " + std::to_string(phi.r()));
  }
  for (int e : tuple) {
    if (e < 1 || e > phi.n()) {
      throw Error(ErrorKind::kIndexOutOfRange, "entry " + std::to_string(e) + " outside [1," + std::to_string(phi.n()) + "]");
    }
  }
  Tuple sorted(tuple.begin(), tuple.end());
  bool odd = false;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      odd = !odd;
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return TPhiValue::Zero();
  const TPhiValue& v = phi.At(sorted);
  return odd ? neg(v) : v;
}

std::vector<TPhiValue> gp_relation_terms(const GPFunction& phi, std::span<const int> xs,
                                         std::span<const int> ys) {
  const auto r = static_cast<std::size_t>(phi.r());
  if (xs.size() != r + 1 || ys.size() != r - 1) {
    throw Error(ErrorKind::kBadArity, "relation needs |xs| = r+1 and |ys| = r-1");
  }
  std::vector<TPhiValue> terms;
  terms.reserve(r + 1);
  Tuple without(r);
  Tuple with(r);
  std::copy(ys.begin(), ys.end(), with.begin() + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    std::size_t w = 0;
    for (std::size_t i = 0; i <= r; ++i) {
      if (i != k) without[w++] = xs[i];
    }
    with[0] = xs[k];
    TPhiValue term = gp_eval(phi, without) * gp_eval(phi, with);
    // Positions are 1-based in the relation, so (-1)^(k+1).
    terms.push_back(k % 2 == 0 ? neg(term) : term);
  }
  return terms;
}

bool gp_relation_check(const GPFunction& phi, std::span<const int> xs, std::span<const int> ys) {
  return contains_zero(gp_relation_terms(phi, xs, ys));
}

GPReport gp_verify_all(const GPFunction& phi, RelationSweep sweep, Exec exec) {
  GPReport report;
  if (phi.IsIdenticallyZero()) {
    report.reason = "not identically zero";
    return report;
  }
  const int n = phi.n();
  const int r = phi.r();
  std::vector<Tuple> xs_list;
  std::vector<Tuple> ys_list;
  if (sweep == RelationSweep::kSubsets) {
    xs_list = IncreasingTuples(n, r + 1);
    ys_list = IncreasingTuples(n, r - 1);
  } else {
    xs_list = r + 1 <= n ? AllTuples(n, r + 1, true) : std::vector<Tuple>{};
    ys_list = AllTuples(n, r - 1, false);
  }
  const auto ny = static_cast<std::int64_t>(ys_list.size());
  const auto total = static_cast<std::int64_t>(xs_list.size()) * ny;
  std::int64_t first_failure = total;
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_failure) if (parallel)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (idx >= first_failure) continue;
    const Tuple& xs = xs_list[static_cast<std::size_t>(idx / ny)];
    const Tuple& ys = ys_list[static_cast<std::size_t>(idx % ny)];
    if (!gp_relation_check(phi, xs, ys)) first_failure = std::min(first_failure, idx);
  }
  report.relations_checked = static_cast<std::uint64_t>(total);
  if (first_failure == total) {
    report.pass = true;
    return report;
  }
  report.failing_xs = xs_list[static_cast<std::size_t>(first_failure / ny)];
  report.failing_ys = ys_list[static_cast<std::size_t>(first_failure % ny)];
  report.reason = "Grassmann-Pluecker relation fails at xs=" + TupleString(*report.failing_xs) +
                  " ys=" + TupleString(*report.failing_ys);
  return report;
}

GPFunction gp_normalize(const GPFunction& phi) {
  auto it = std::find_if(phi.values().begin(), phi.values().end(),
                         [](const TPhiValue& v) { return v.is_unit(); });
  if (it == phi.values().end()) throw Error(ErrorKind::kIdenticallyZero, "cannot normalize the zero function");
  return phi.Scaled(it->Inverse());
}

bool gp_is_normalized(const GPFunction& phi) {
  auto it = std::find_if(phi.values().begin(), phi.values().end(),
                         [](const TPhiValue& v) { return v.is_unit(); });
  return it != phi.values().end() && *it == TPhiValue::Unit(0, 1);
}

Transversal transversal(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw Error(ErrorKind::kInvalidArgument, "transversal needs 1 <= r <= n");
  }
  Transversal out;
  std::set<Tuple> removed;
  for (const Tuple& s : AllTuples(n, r, true)) {
    if (removed.count(s)) continue;
    out.tuples.push_back(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        Tuple swapped = s;
        std::swap(swapped[i], swapped[j]);
        removed.insert(std::move(swapped));
      }
    }
  }
  return out;
}

TransversalCheck check_transversal(int n, int r, const Transversal& t) {
  TransversalCheck check;
  std::set<Tuple> members(t.tuples.begin(), t.tuples.end());
  auto swaps = [](const Tuple& s) {
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        Tuple w = s;
        std::swap(w[i], w[j]);
        out.push_back(std::move(w));
      }
    }
    return out;
  };
  for (const Tuple& s : t.tuples) {
    if (s.size() != static_cast<std::size_t>(r) || !AllDistinct(s) ||
        std::any_of(s.begin(), s.end(), [n](int e) { return e < 1 || e > n; })) {
      check.no_repeated_entries = false;
    }
    for (const Tuple& w : swaps(s)) {
      if (members.count(w)) check.closed_to_transposition = false;
    }
  }
  for (const Tuple& s : AllTuples(n, r, true)) {
    if (members.count(s)) continue;
    auto ws = swaps(s);
    if (std::none_of(ws.begin(), ws.end(), [&](const Tuple& w) { return members.count(w) > 0; })) {
      check.covers_by_transposition = false;
    }
  }
  return check;
}

}  // namespace tphi
