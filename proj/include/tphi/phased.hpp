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

// Phased vectors, perp sets and strong Grassmann-Pluecker functions over the
// tropical phase hyperfield.
//
// Ground-set elements are 1-based: E = {1, ..., n}. Tuples are plain vectors
// of ints; an "increasing tuple" is a strictly increasing one.

#ifndef TPHI_PHASED_HPP_
#define TPHI_PHASED_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tphi/error.hpp"
#include "tphi/hyperfield.hpp"

namespace tphi {

using Tuple = std::vector<int>;

class PhasedVector {
 public:
  PhasedVector() = default;
  explicit PhasedVector(std::vector<TPhiValue> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const TPhiValue& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<TPhiValue>& entries() const { return entries_; }

  // 0-based indices of the non-Zero entries.
  std::vector<std::size_t> support() const;
  std::size_t support_size() const;
  bool is_zero() const { return support_size() == 0; }

  PhasedVector Scaled(const TPhiValue& t) const;

  // Coordinatewise order induced by 0 < unit: x <= y iff each x_i is 0 or y_i.
  bool LessEq(const PhasedVector& other) const;

  bool operator==(const PhasedVector& o) const = default;
  auto operator<=>(const PhasedVector& o) const = default;

  // "v1,v2,...,vn".
  std::string ToString() const;
  static PhasedVector Parse(std::string_view text);

 private:
  std::vector<TPhiValue> entries_;
};

// x lies in v^perp for every v in vs, i.e. 0 is in v_1 x_1 (+) ... (+) v_n x_n.
// Throws kLengthMismatch or kZeroVector.
bool perp_membership(std::span<const PhasedVector> vs, const PhasedVector& x);

// Every x in (TPhi_k)^n - {0} lying in the perp set, lexicographically
// sorted (Zero < 0/1 < 1/k < ...). k must be even; n is the common length of vs.
std::vector<PhasedVector> perp_enumerate(std::span<const PhasedVector> vs, std::int64_t k,
                                         Exec exec = Exec::kParallel,
                                         std::size_t cap = kDefaultCap);

// Number of r-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t Binomial(int n, int r);

// All strictly increasing r-tuples over {1..n} in lexicographic order.
std::vector<Tuple> IncreasingTuples(int n, int r);

// An alternating function [n]^r -> TPhi, stored on increasing tuples in
// lexicographic order.
class GPFunction {
 public:
  GPFunction(int n, int r);
  GPFunction(int n, int r, std::vector<TPhiValue> values);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<TPhiValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  // Position of an increasing tuple in the storage order.
  std::size_t IndexOf(std::span<const int> increasing) const;
  const TPhiValue& At(std::span<const int> increasing) const { return values_[IndexOf(increasing)]; }
  void Set(std::span<const int> increasing, const TPhiValue& v) { values_[IndexOf(increasing)] = v; }

  bool IsIdenticallyZero() const;
  GPFunction Scaled(const TPhiValue& t) const;

  bool operator==(const GPFunction& o) const = default;
  auto operator<=>(const GPFunction& o) const = default;

  // File format: first line "n r", then "i1 ... ir : v" per increasing tuple
  // with a value other than 0. Missing tuples read as 0.
  std::string ToFileText() const;
  static GPFunction Parse(std::istream& in);
  // Values in storage order, space separated.
  std::string ToCompactString() const;

 private:
  int n_;
  int r_;
  std::vector<TPhiValue> values_;
};

// Value on an arbitrary tuple: Zero on repeated entries, otherwise the stored
// value times the sign of the sorting permutation. Throws kBadArity or
// kIndexOutOfRange.
TPhiValue gp_eval(const GPFunction& phi, std::span<const int> tuple);

// The r+1 terms (-1)^k phi(x without x_k) phi(x_k, y) of one relation.
std::vector<TPhiValue> gp_relation_terms(const GPFunction& phi, std::span<const int> xs,
                                         std::span<const int> ys);

// One strong Grassmann-Pluecker relation. Throws kBadArity when |xs| != r+1
// or |ys| != r-1.
bool gp_relation_check(const GPFunction& phi, std::span<const int> xs, std::span<const int> ys);

enum class RelationSweep {
  kSubsets,    // increasing xs and ys
  kAllTuples,  // ordered xs with distinct entries, every ys in [n]^(r-1)
};

struct GPReport {
  bool pass = false;
  std::string reason;  // empty on pass
  std::optional<Tuple> failing_xs;
  std::optional<Tuple> failing_ys;
  std::uint64_t relations_checked = 0;
};

// Non-vanishing, then every relation; on failure reports the first failing
// (xs, ys) in lexicographic order.
GPReport gp_verify_all(const GPFunction& phi, RelationSweep sweep = RelationSweep::kSubsets,
                       Exec exec = Exec::kParallel);

// Scales phi so the first non-Zero stored value becomes 0/1.
// Throws kIdenticallyZero.
GPFunction gp_normalize(const GPFunction& phi);
bool gp_is_normalized(const GPFunction& phi);

struct Transversal {
  std::vector<Tuple> tuples;
  std::size_t d() const { return tuples.size(); }
};

// Greedy transversal: walk the distinct-entry r-tuples in lexicographic order,
// keeping a tuple unless it is a transposition of one already kept.
Transversal transversal(int n, int r);

struct TransversalCheck {
  bool no_repeated_entries = true;
  bool covers_by_transposition = true;  // each distinct tuple is in T or one swap from T
  bool closed_to_transposition = true;  // no swap of a T element is in T
  bool ok() const { return no_repeated_entries && covers_by_transposition && closed_to_transposition; }
};
TransversalCheck check_transversal(int n, int r, const Transversal& t);

}  // namespace tphi

#endif  // TPHI_PHASED_HPP_
