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

// Finite posets and mirrored posets (a poset X with an order-preserving
// "mirror" onto a finite index poset R whose fibres are the strata X_r).

#ifndef TPHI_POSET_HPP_
#define TPHI_POSET_HPP_

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tphi/error.hpp"

namespace tphi {

using ElementId = std::uint32_t;
using ElementSet = std::vector<ElementId>;  // sorted, unique

// Immutable finite poset over labelled elements. The strict order is stored
// as a dense bit matrix; <= is derived.
class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds from a strict relation given by a predicate on indices and takes
  // its transitive closure. Throws kCycleDetected.
  static FinitePoset FromRelation(std::vector<std::string> labels,
                                  const std::function<bool(ElementId, ElementId)>& less);
  // Same, from an explicit list of strict pairs (a, b) meaning a < b.
  static FinitePoset FromPairs(std::vector<std::string> labels,
                               const std::vector<std::pair<ElementId, ElementId>>& pairs);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ElementId e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  ElementId IndexOf(const std::string& label) const;  // throws kUnknownElement
  bool Has(const std::string& label) const { return index_.count(label) > 0; }

  bool Less(ElementId a, ElementId b) const {
    return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }
  bool LessEq(ElementId a, ElementId b) const { return a == b || Less(a, b); }
  // Bit row of the elements strictly above e.
  std::span<const std::uint64_t> AboveBits(ElementId e) const { return {rows_.data() + e * words_, words_}; }
  bool Comparable(ElementId a, ElementId b) const { return LessEq(a, b) || Less(b, a); }

  // Elements strictly above / below e, ascending by index.
  ElementSet Above(ElementId e) const;
  ElementSet Below(ElementId e) const;
  // Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<ElementId, ElementId>> Covers() const;
  std::size_t RelationCount() const;

  ElementSet Minimal() const;
  ElementSet Maximal() const;

  FinitePoset Opposite() const;
  // Induced subposet on `subset` (sorted); labels carry over.
  FinitePoset Induced(std::span<const ElementId> subset) const;

  // Element ids ordered by label.
  std::vector<ElementId> ByLabel() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Throws kUnknownElement or kCycleDetected.
FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& strict_pairs);

// Reflexive upset: everything >= some element of A. Throws kUnknownElement.
ElementSet upset(const FinitePoset& p, std::span<const ElementId> a);
ElementSet upset(const FinitePoset& p, const std::vector<std::string>& labels);

// {x in U : x < y}.
ElementSet predecessors_within(const FinitePoset& p, std::span<const ElementId> u, ElementId y);

class MirroredPoset {
 public:
  MirroredPoset(FinitePoset poset, FinitePoset index_poset, std::vector<ElementId> mirror);

  const FinitePoset& poset() const { return poset_; }
  const FinitePoset& index_poset() const { return index_; }
  ElementId mirror(ElementId e) const { return mirror_[e]; }
  const std::vector<ElementId>& mirror_map() const { return mirror_; }
  // The stratum X_r, ascending by index.
  ElementSet Stratum(ElementId r) const;

 private:
  FinitePoset poset_;
  FinitePoset index_;
  std::vector<ElementId> mirror_;
};

struct CheckReport {
  bool pass = true;
  std::vector<std::string> violations;  // in detection order
  std::vector<std::string> notes;       // facts about the check that are not failures
};

// x < y implies mirror(x) < mirror(y); every fibre is non-empty.
CheckReport mirror_check(const MirroredPoset& mp);

// Discrete forms of the additional axioms: for r < s and x in X_r the set
// upset(x) meet X_s is non-empty (A1). Continuity and openness hold trivially
// for finite discrete strata and are recorded as notes, as is the singleton
// form of the trivial-shape condition.
CheckReport geometric_discrete_check(const MirroredPoset& mp);

// Connected components of the comparability graph, ordered by their least
// element index.
std::vector<ElementSet> discrete_type_classes(const FinitePoset& p);

// Text format:
//   elem <label>
//   rel <a> < <b>
// and for mirrored posets additionally
//   begin index
//     elem <r> / rel <r> < <s>
//   end index
//   mirror <label> -> <r>
struct PosetFile {
  FinitePoset poset;
  std::optional<MirroredPoset> mirrored;
};
PosetFile ParsePosetFile(std::istream& in);
std::string FormatPoset(const FinitePoset& p);
std::string FormatMirroredPoset(const MirroredPoset& mp);

}  // namespace tphi

#endif  // TPHI_POSET_HPP_
