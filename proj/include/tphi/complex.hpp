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

// Finite abstract simplicial complexes.
//
// A complex keeps, for each dimension d, its d-simplices as sorted vertex
// index lists packed into one flat array with stride d+1, in lexicographic
// order. Faces are located by binary search.

#ifndef TPHI_COMPLEX_HPP_
#define TPHI_COMPLEX_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tphi/error.hpp"
#include "tphi/poset.hpp"

namespace tphi {

using VertexId = std::uint32_t;
using Simplex = std::vector<VertexId>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Closes the given simplices under taking non-empty faces.
  static SimplicialComplex FromFacets(std::vector<std::string> labels, const std::vector<Simplex>& facets);
  // `by_dim[d]` holds d-simplices as flat, already downward-closed data in any
  // order; duplicates are removed.
  static SimplicialComplex FromClosedFlat(std::vector<std::string> labels,
                                          std::vector<std::vector<VertexId>> by_dim);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  std::size_t count(int d) const;
  std::size_t total() const;
  std::span<const VertexId> simplex(int d, std::size_t i) const {
    const auto w = static_cast<std::size_t>(d) + 1;
    return {faces_[static_cast<std::size_t>(d)].data() + i * w, w};
  }
  // Index of a sorted simplex within its dimension.
  std::optional<std::size_t> Find(std::span<const VertexId> s) const;
  bool Contains(std::span<const VertexId> s) const { return Find(s).has_value(); }

  std::vector<Simplex> Maximal() const;

  // Same simplices under new vertex labels.
  SimplicialComplex Relabeled(std::vector<std::string> labels) const;

  // Canonical text: one simplex per line as labels sorted and space separated,
  // lines in lexicographic order.
  std::vector<std::string> CanonicalLines() const;
  std::string ToText() const;
  // Reads the export format; every listed simplex and its faces are included.
  static SimplicialComplex Parse(std::istream& in);

  bool operator==(const SimplicialComplex& o) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> faces_;
};

// Number of non-empty chains of p, saturating at UINT64_MAX.
std::uint64_t count_chains(const FinitePoset& p);

// Complex of non-empty chains; vertex i is element i. Throws kSizeCapExceeded
// when the chain count exceeds cap.
SimplicialComplex order_complex(const FinitePoset& p, std::size_t cap = kDefaultCap,
                                Exec exec = Exec::kParallel);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Discrete complex on k isolated vertices labelled prefix0..prefix{k-1}.
SimplicialComplex point_set(std::size_t k, const std::string& prefix = "p");

std::int64_t euler_characteristic(const SimplicialComplex& c);

// Face poset (simplices ordered by inclusion), labels "{a,b,...}".
FinitePoset face_poset(const SimplicialComplex& c);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c, std::size_t cap = kDefaultCap);

struct CollapseStep {
  Simplex face;
  Simplex coface;
};

struct CollapseCertificate {
  enum class Kind { kCone, kCollapse, kInconclusive };
  Kind kind = Kind::kInconclusive;
  std::optional<VertexId> apex;       // for kCone
  std::vector<CollapseStep> steps;    // filled when requested
  std::size_t step_count = 0;
  std::size_t remaining = 0;          // simplices left after collapsing

  bool collapsible() const { return kind != Kind::kInconclusive; }
};

const char* CertificateKindName(CollapseCertificate::Kind kind);

// A vertex lying in every maximal simplex if there is one.
std::optional<VertexId> find_cone_apex(const SimplicialComplex& c);

// Cone detection, then greedy elementary collapses of free faces. Reaching a
// single vertex proves contractibility; getting stuck proves nothing.
CollapseCertificate collapse_certify(const SimplicialComplex& c, bool with_steps = true);

}  // namespace tphi

#endif  // TPHI_COMPLEX_HPP_
