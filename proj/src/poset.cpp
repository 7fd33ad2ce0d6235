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

#include "tphi/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "tphi/text_io.hpp"

namespace tphi {

namespace {

void IndexLabels(const std::vector<std::string>& labels, std::unordered_map<std::string, ElementId>& index) {
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<ElementId>(i)).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate element label '" + labels[i] + "'");
    }
  }
}

}  // namespace

FinitePoset FinitePoset::FromRelation(std::vector<std::string> labels,
                                      const std::function<bool(ElementId, ElementId)>& less) {
  const std::size_t n = labels.size();
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less(static_cast<ElementId>(i), static_cast<ElementId>(j))) {
        pairs.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
  }
  return FromPairs(std::move(labels), pairs);
}

FinitePoset FinitePoset::FromPairs(std::vector<std::string> labels,
                                   const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  FinitePoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  IndexLabels(p.labels_, p.index_);
  p.words_ = (n + 63) / 64;
  p.rows_.assign(n * p.words_, 0);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::kUnknownElement, "element id out of range");
    p.rows_[a * p.words_ + (b >> 6)] |= 1ULL << (b & 63);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* row_k = &p.rows_[k * p.words_];
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t* row_i = &p.rows_[i * p.words_];
      if ((row_i[k >> 6] >> (k & 63)) & 1U) {
        for (std::size_t w = 0; w < p.words_; ++w) row_i[w] |= row_k[w];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.Less(static_cast<ElementId>(i), static_cast<ElementId>(i))) {
      throw Error(ErrorKind::kCycleDetected, "element '" + p.labels_[i] + "' lies on a cycle");
    }
  }
  return p;
}

ElementId FinitePoset::IndexOf(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::kUnknownElement, "unknown element '" + label + "'");
  return it->second;
}

namespace {

ElementSet BitsToSet(std::span<const std::uint64_t> bits) {
  ElementSet out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    for (std::uint64_t word = bits[w]; word != 0; word &= word - 1) {
      out.push_back(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
    }
  }
  return out;
}

}  // namespace

ElementSet FinitePoset::Above(ElementId e) const { return BitsToSet(AboveBits(e)); }

ElementSet FinitePoset::Below(ElementId e) const {
  ElementSet out;
  for (ElementId j = 0; j < size(); ++j) {
    if (Less(j, e)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> FinitePoset::Covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a = 0; a < size(); ++a) {
    ElementSet up = Above(a);
    for (ElementId b : up) {
      bool cover = std::none_of(up.begin(), up.end(), [&](ElementId c) { return Less(c, b); });
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t FinitePoset::RelationCount() const {
  std::size_t count = 0;
  for (std::uint64_t w : rows_) count += static_cast<std::size_t>(__builtin_popcountll(w));
  return count;
}

ElementSet FinitePoset::Minimal() const {
  ElementSet out;
  for (ElementId e = 0; e < size(); ++e) {
    bool minimal = true;
    for (ElementId j = 0; j < size() && minimal; ++j) minimal = !Less(j, e);
    if (minimal) out.push_back(e);
  }
  return out;
}

ElementSet FinitePoset::Maximal() const {
  ElementSet out;
  for (ElementId e = 0; e < size(); ++e) {
    const std::uint64_t* row = &rows_[e * words_];
    if (std::all_of(row, row + words_, [](std::uint64_t w) { return w == 0; })) out.push_back(e);
  }
  return out;
}

FinitePoset FinitePoset::Opposite() const {
  return FromRelation(labels_, [this](ElementId a, ElementId b) { return Less(b, a); });
}

FinitePoset FinitePoset::Induced(std::span<const ElementId> subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (ElementId e : subset) labels.push_back(labels_[e]);
  return FromRelation(std::move(labels),
                      [&](ElementId a, ElementId b) { return Less(subset[a], subset[b]); });
}

std::vector<ElementId> FinitePoset::ByLabel() const {
  std::vector<ElementId> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](ElementId a, ElementId b) { return labels_[a] < labels_[b]; });
  return order;
}

FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& strict_pairs) {
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<ElementId>(i));
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(strict_pairs.size());
  for (const auto& [a, b] : strict_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::kUnknownElement, "unknown element '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::kUnknownElement, "unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  std::sort(pairs.begin(), pairs.end());
  return FinitePoset::FromRelation(std::move(elements), [&](ElementId a, ElementId b) {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  });
}

ElementSet upset(const FinitePoset& p, std::span<const ElementId> a) {
  std::vector<std::uint64_t> bits((p.size() + 63) / 64, 0);
  for (ElementId x : a) {
    if (x >= p.size()) throw Error(ErrorKind::kUnknownElement, "element id " + std::to_string(x) + " out of range");
    bits[x >> 6] |= 1ULL << (x & 63);
    const auto row = p.AboveBits(x);
    for (std::size_t w = 0; w < bits.size(); ++w) bits[w] |= row[w];
  }
  return BitsToSet(bits);
}

ElementSet upset(const FinitePoset& p, const std::vector<std::string>& labels) {
  ElementSet ids;
  for (const std::string& l : labels) ids.push_back(p.IndexOf(l));
  return upset(p, ids);
}

ElementSet predecessors_within(const FinitePoset& p, std::span<const ElementId> u, ElementId y) {
  ElementSet out;
  for (ElementId x : u) {
    if (p.Less(x, y)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MirroredPoset::MirroredPoset(FinitePoset poset, FinitePoset index_poset, std::vector<ElementId> mirror)
    : poset_(std::move(poset)), index_(std::move(index_poset)), mirror_(std::move(mirror)) {
  if (mirror_.size() != poset_.size()) {
    throw Error(ErrorKind::kLengthMismatch, "mirror must assign an index to every element");
  }
  for (ElementId r : mirror_) {
    if (r >= index_.size()) throw Error(ErrorKind::kUnknownElement, "mirror image outside the index poset");
  }
}

ElementSet MirroredPoset::Stratum(ElementId r) const {
  ElementSet out;
  for (ElementId e = 0; e < poset_.size(); ++e) {
    if (mirror_[e] == r) out.push_back(e);
  }
  return out;
}

CheckReport mirror_check(const MirroredPoset& mp) {
  CheckReport report;
  const FinitePoset& x = mp.poset();
  const FinitePoset& r = mp.index_poset();
  for (ElementId a = 0; a < x.size() && report.pass; ++a) {
    for (ElementId b = 0; b < x.size(); ++b) {
      if (x.Less(a, b) && !r.Less(mp.mirror(a), mp.mirror(b))) {
        report.pass = false;
        report.violations.push_back("monotonicity: " + x.label(a) + " < " + x.label(b) + " but mirror " +
                                    r.label(mp.mirror(a)) + " is not below " + r.label(mp.mirror(b)));
        break;
      }
    }
  }
  if (report.pass) {
    for (ElementId s = 0; s < r.size(); ++s) {
      if (mp.Stratum(s).empty()) {
        report.pass = false;
        report.violations.push_back("non-empty fiber: stratum " + r.label(s) + " is empty");
        break;
      }
    }
  }
  return report;
}

CheckReport geometric_discrete_check(const MirroredPoset& mp) {
  CheckReport report;
  const FinitePoset& x = mp.poset();
  const FinitePoset& r = mp.index_poset();
  for (ElementId e = 0; e < x.size(); ++e) {
    const ElementId re = mp.mirror(e);
    for (ElementId s = 0; s < r.size(); ++s) {
      if (!r.Less(re, s)) continue;
      bool found = false;
      for (ElementId y = 0; y < x.size() && !found; ++y) found = mp.mirror(y) == s && x.Less(e, y);
      if (!found) {
        report.pass = false;
        report.violations.push_back("A1: " + x.label(e) + "^(" + r.label(s) + ") is empty");
      }
    }
  }
  // With the singleton basis, {x' in {x} : x' < y} = {x} for every y in x^(s).
  for (ElementId e = 0; e < x.size(); ++e) {
    for (ElementId y : x.Above(e)) {
      if (predecessors_within(x, std::span<const ElementId>(&e, 1), y).size() != 1) {
        report.pass = false;
        report.violations.push_back("A3: predecessor set of " + x.label(y) + " in {" + x.label(e) +
                                    "} is not a singleton");
      }
    }
  }
  report.notes.push_back("A1 compactness holds: strata are finite");
  report.notes.push_back("A2 holds vacuously: strata carry the discrete topology");
  report.notes.push_back("A3 checked on the singleton basis of each discrete stratum");
  report.notes.push_back("openness property holds vacuously: every subset of a discrete stratum is open");
  return report;
}

std::vector<ElementSet> discrete_type_classes(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<ElementId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ElementId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (p.Comparable(a, b)) {
        ElementId ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::map<ElementId, ElementSet> classes;
  for (ElementId e = 0; e < n; ++e) classes[find(e)].push_back(e);
  std::vector<ElementSet> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

namespace {

[[noreturn]] void ParseFail(int line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

struct PosetDraft {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> rels;

  void Accept(const SourceLine& line, const std::vector<std::string_view>& tok) {
    if (tok[0] == "elem") {
      if (tok.size() != 2) ParseFail(line.number, "expected 'elem <label>'");
      elems.emplace_back(tok[1]);
    } else if (tok[0] == "rel") {
      if (tok.size() != 4 || tok[2] != "<") ParseFail(line.number, "expected 'rel <a> < <b>'");
      rels.emplace_back(std::string(tok[1]), std::string(tok[3]));
    } else {
      ParseFail(line.number, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
};

void AppendPosetBody(std::ostringstream& os, const FinitePoset& p, const std::string& indent) {
  for (ElementId e : p.ByLabel()) os << indent << "elem " << p.label(e) << '\n';
  auto covers = p.Covers();
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    return std::tie(p.label(a.first), p.label(a.second)) < std::tie(p.label(b.first), p.label(b.second));
  });
  for (const auto& [a, b] : covers) os << indent << "rel " << p.label(a) << " < " << p.label(b) << '\n';
}

}  // namespace

PosetFile ParsePosetFile(std::istream& in) {
  PosetDraft main;
  PosetDraft index;
  bool in_index = false;
  bool saw_index = false;
  std::vector<std::pair<std::string, std::string>> mirrors;
  for (const SourceLine& line : ReadContentLines(in)) {
    auto tok = SplitWhitespace(line.text);
    if (tok.size() == 2 && tok[0] == "begin" && tok[1] == "index") {
      if (in_index || saw_index) ParseFail(line.number, "only one index block is allowed");
      in_index = saw_index = true;
    } else if (tok.size() == 2 && tok[0] == "end" && tok[1] == "index") {
      if (!in_index) ParseFail(line.number, "'end index' without 'begin index'");
      in_index = false;
    } else if (tok[0] == "mirror") {
      if (tok.size() != 4 || tok[2] != "->") ParseFail(line.number, "expected 'mirror <label> -> <index>'");
      mirrors.emplace_back(std::string(tok[1]), std::string(tok[3]));
    } else {
      (in_index ? index : main).Accept(line, tok);
    }
  }
  if (in_index) throw Error(ErrorKind::kParse, "unterminated index block");

  PosetFile file{build_poset(std::move(main.elems), main.rels), std::nullopt};
  if (!saw_index && mirrors.empty()) return file;
  if (!saw_index) throw Error(ErrorKind::kParse, "mirror lines need an index block");
  FinitePoset index_poset = build_poset(std::move(index.elems), index.rels);
  std::vector<ElementId> mirror(file.poset.size(), 0);
  std::vector<char> assigned(file.poset.size(), 0);
  for (const auto& [elem, target] : mirrors) {
    ElementId e = file.poset.IndexOf(elem);
    if (assigned[e]) throw Error(ErrorKind::kParse, "element '" + elem + "' mirrored twice");
    assigned[e] = 1;
    mirror[e] = index_poset.IndexOf(target);
  }
  for (ElementId e = 0; e < file.poset.size(); ++e) {
    if (!assigned[e]) throw Error(ErrorKind::kParse, "element '" + file.poset.label(e) + "' has no mirror");
  }
  file.mirrored.emplace(file.poset, std::move(index_poset), std::move(mirror));
  return file;
}

std::string FormatPoset(const FinitePoset& p) {
  std::ostringstream os;
  AppendPosetBody(os, p, "");
  return os.str();
}

std::string FormatMirroredPoset(const MirroredPoset& mp) {
  std::ostringstream os;
  AppendPosetBody(os, mp.poset(), "");
  os << "begin index\n";
  AppendPosetBody(os, mp.index_poset(), "  ");
  os << "end index\n";
  const FinitePoset& p = mp.poset();
  for (ElementId e : p.ByLabel()) {
    os << "mirror " << p.label(e) << " -> " << mp.index_poset().label(mp.mirror(e)) << '\n';
  }
  return os.str();
}

}  // namespace tphi
