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

// McCord-style checks for finite spaces: the comparison map Delta(X) -> X,
// contractibility certificates for preimages of basic opens, finite-space
// homology and CW-type obstruction reports.

#ifndef TPHI_MCCORD_HPP_
#define TPHI_MCCORD_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tphi/complex.hpp"
#include "tphi/error.hpp"
#include "tphi/homology.hpp"
#include "tphi/poset.hpp"

namespace tphi {

// f(chain) = the largest element of a non-empty chain. Throws kInvalidArgument
// if the input is empty or not a chain.
ElementId comparison_map(const FinitePoset& p, std::span<const VertexId> chain);

// Delta(upset(x)); vertex i is the i-th element of upset(x). Throws kUnknownElement.
SimplicialComplex comparison_fiber_complex(const FinitePoset& p, ElementId x, std::size_t cap = kDefaultCap);
SimplicialComplex comparison_fiber_complex(const FinitePoset& p, const std::string& x,
                                           std::size_t cap = kDefaultCap);

enum class CertificateStrength { kConeApex, kCollapseSequence, kHomologyOnly, kObstruction };
const char* CertificateStrengthName(CertificateStrength s);

struct BasisCertificate {
  ElementId element = 0;
  std::string label;
  CertificateStrength strength = CertificateStrength::kObstruction;
  std::uint64_t simplices = 0;  // size of Delta(upset(x))
  bool materialized = false;    // Delta(upset(x)) was built and inspected
};

struct McCordReport {
  std::vector<BasisCertificate> entries;  // one per element, ascending by id
  bool verdict = false;                   // every preimage certified contractible
  HomologySummary homology;               // unreduced homology of Delta(X)

  std::size_t Count(CertificateStrength s) const;
};

inline constexpr std::size_t kDefaultFiberCap = 100'000;

// Certifies each Delta(upset(x)). Fibres with more than min(cap, fiber_cap)
// simplices are not built; for them the cone test is run on the poset
// (x below every element of upset(x)), which is equivalent.
McCordReport basis_certificates(const FinitePoset& p, std::size_t cap = kDefaultCap,
                                Exec exec = Exec::kParallel, std::size_t fiber_cap = kDefaultFiberCap);

// If p is the face poset of a simplicial complex K (minimal elements are the
// vertices, each down-set is the set of non-empty faces of a simplex), returns
// K with vertices labelled by the minimal elements. Delta(p) is then the
// barycentric subdivision of K.
std::optional<SimplicialComplex> face_poset_complex(const FinitePoset& p);

// Homology of Delta(p). Computed on Delta(p) itself while its simplex count is
// within cap; beyond that, through face_poset_complex when p is a face poset.
// Throws kSizeCapExceeded otherwise.
HomologySummary order_complex_homology(const FinitePoset& p, bool reduced, std::size_t cap = kDefaultCap,
                                       Exec exec = Exec::kParallel);

HomologySummary finite_space_homology(const FinitePoset& p, std::size_t cap = kDefaultCap,
                                      Exec exec = Exec::kParallel);

enum class ComponentStatus { kContractible, kObstructed, kInconclusive };
const char* ComponentStatusName(ComponentStatus s);

struct ComponentReport {
  ElementSet elements;
  ComponentStatus status = ComponentStatus::kInconclusive;
  std::string evidence;              // "cone-apex", "collapse-sequence", "reduced homology", ...
  HomologySummary reduced_homology;  // filled unless contractibility was certified
};

struct CwTypeReport {
  std::vector<ComponentReport> components;  // discrete type classes in order

  bool cw_type() const;     // every component certified contractible
  bool obstructed() const;  // some component has non-trivial reduced homology
  // "CW type", "obstructed" or "inconclusive".
  std::string Verdict() const;
};

CwTypeReport cw_type_report(const FinitePoset& p, std::size_t cap = kDefaultCap);

}  // namespace tphi

#endif  // TPHI_MCCORD_HPP_
