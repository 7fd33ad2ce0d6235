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

#include "tphi/mccord.hpp"

#include <algorithm>
#include <exception>

namespace tphi {

namespace {

bool ApexInAllMaximal(const SimplicialComplex& c, VertexId apex) {
  for (const Simplex& s : c.Maximal()) {
    if (!std::binary_search(s.begin(), s.end(), apex)) return false;
  }
  return true;
}

BasisCertificate CertifyElement(const FinitePoset& p, ElementId x, std::size_t cap, std::size_t fiber_cap) {
  BasisCertificate cert;
  cert.element = x;
  cert.label = p.label(x);
  const ElementId one[] = {x};
  const ElementSet up = upset(p, one);
  const FinitePoset sub = p.Induced(up);
  const auto local = static_cast<VertexId>(std::lower_bound(up.begin(), up.end(), x) - up.begin());
  cert.simplices = count_chains(sub);
  if (cert.simplices > std::min(cap, fiber_cap)) {
    // Too large to materialise: every chain of upset(x) extends by x.
    bool cone = true;
    for (ElementId y = 0; y < sub.size() && cone; ++y) cone = sub.LessEq(local, y);
    cert.strength = cone ? CertificateStrength::kConeApex : CertificateStrength::kObstruction;
    return cert;
  }
  const SimplicialComplex c = order_complex(sub, cap, Exec::kSerial);
  cert.materialized = true;
  if (ApexInAllMaximal(c, local)) {
    cert.strength = CertificateStrength::kConeApex;
  } else if (collapse_certify(c, false).collapsible()) {
    cert.strength = CertificateStrength::kCollapseSequence;
  } else if (homology_groups(c, true, Coefficients::kIntegers, Exec::kSerial).trivial()) {
    cert.strength = CertificateStrength::kHomologyOnly;
  } else {
    cert.strength = CertificateStrength::kObstruction;
  }
  return cert;
}

}  // namespace

ElementId comparison_map(const FinitePoset& p, std::span<const VertexId> chain) {
  if (chain.empty()) throw Error(ErrorKind::kInvalidArgument, "empty chain");
  ElementId top = chain.front();
  for (VertexId v : chain) {
    if (v >= p.size()) throw Error(ErrorKind::kUnknownElement, "element id " + std::to_string(v) + " out of range");
    if (!p.Comparable(top, v)) throw Error(ErrorKind::kInvalidArgument, "vertices do not form a chain");
    if (p.Less(top, v)) top = v;
  }
  for (VertexId v : chain) {
    if (!p.LessEq(v, top)) throw Error(ErrorKind::kInvalidArgument, "vertices do not form a chain");
  }
  return top;
}

SimplicialComplex comparison_fiber_complex(const FinitePoset& p, ElementId x, std::size_t cap) {
  if (x >= p.size()) throw Error(ErrorKind::kUnknownElement, "element id " + std::to_string(x) + " out of range");
  const ElementId one[] = {x};
  return order_complex(p.Induced(upset(p, one)), cap, Exec::kSerial);
}

SimplicialComplex comparison_fiber_complex(const FinitePoset& p, const std::string& x, std::size_t cap) {
  return comparison_fiber_complex(p, p.IndexOf(x), cap);
}

const char* CertificateStrengthName(CertificateStrength s) {
  switch (s) {
    case CertificateStrength::kConeApex: return "cone-apex";
    case CertificateStrength::kCollapseSequence: return "collapse-sequence";
    case CertificateStrength::kHomologyOnly: return "homology-only";
    case CertificateStrength::kObstruction: return "obstruction";
  }
  return "?";
}

std::size_t McCordReport::Count(CertificateStrength s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const BasisCertificate& e) { return e.strength == s; }));
}

McCordReport basis_certificates(const FinitePoset& p, std::size_t cap, Exec exec, std::size_t fiber_cap) {
  McCordReport report;
  const auto n = static_cast<std::int64_t>(p.size());
  report.entries.resize(p.size());
  std::exception_ptr failure;
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      report.entries[static_cast<std::size_t>(i)] = CertifyElement(p, static_cast<ElementId>(i), cap, fiber_cap);
    } catch (...) {
#pragma omp critical(tphi_mccord_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  report.verdict = std::none_of(report.entries.begin(), report.entries.end(), [](const BasisCertificate& e) {
    return e.strength == CertificateStrength::kObstruction;
  });
  report.homology = order_complex_homology(p, false, cap, exec);
  return report;
}

std::optional<SimplicialComplex> face_poset_complex(const FinitePoset& p) {
  const std::size_t n = p.size();
  const ElementSet atoms = p.Minimal();
  std::vector<std::vector<VertexId>> atoms_below(n);
  for (ElementId x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (p.LessEq(atoms[a], x)) atoms_below[x].push_back(static_cast<VertexId>(a));
    }
    if (atoms_below[x].size() >= 63) return std::nullopt;
  }
  for (ElementId x = 0; x < n; ++x) {
    std::size_t below = 0;
    for (ElementId y = 0; y < n; ++y) {
      const bool subset = std::includes(atoms_below[x].begin(), atoms_below[x].end(), atoms_below[y].begin(),
                                        atoms_below[y].end());
      if (subset != p.LessEq(y, x)) return std::nullopt;
      if (subset) ++below;
    }
    // Distinct atom sets below x (injectivity follows from the equivalence)
    // fill every non-empty subset exactly when there are 2^|A(x)| - 1 of them.
    if (below != (std::size_t{1} << atoms_below[x].size()) - 1) return std::nullopt;
  }
  std::vector<std::string> labels;
  for (ElementId a : atoms) labels.push_back(p.label(a));
  std::vector<std::vector<VertexId>> by_dim;
  for (ElementId x = 0; x < n; ++x) {
    const std::size_t d = atoms_below[x].size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].insert(by_dim[d].end(), atoms_below[x].begin(), atoms_below[x].end());
  }
  return SimplicialComplex::FromClosedFlat(std::move(labels), std::move(by_dim));
}

HomologySummary order_complex_homology(const FinitePoset& p, bool reduced, std::size_t cap, Exec exec) {
  if (count_chains(p) <= cap) {
    return homology_groups(order_complex(p, cap, exec), reduced, Coefficients::kIntegers, exec);
  }
  if (std::optional<SimplicialComplex> k = face_poset_complex(p)) {
    return homology_groups(*k, reduced, Coefficients::kIntegers, exec);
  }
  throw Error(ErrorKind::kSizeCapExceeded,
              "order complex has more than " + std::to_string(cap) + " simplices and the poset is not a face poset");
}

HomologySummary finite_space_homology(const FinitePoset& p, std::size_t cap, Exec exec) {
  return order_complex_homology(p, false, cap, exec);
}

const char* ComponentStatusName(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::kContractible: return "contractible";
    case ComponentStatus::kObstructed: return "obstructed";
    case ComponentStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

bool CwTypeReport::cw_type() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentReport& c) { return c.status == ComponentStatus::kContractible; });
}

bool CwTypeReport::obstructed() const {
  return std::any_of(components.begin(), components.end(),
                     [](const ComponentReport& c) { return c.status == ComponentStatus::kObstructed; });
}

std::string CwTypeReport::Verdict() const {
  if (obstructed()) return "obstructed";
  return cw_type() ? "CW type" : "inconclusive";
}

CwTypeReport cw_type_report(const FinitePoset& p, std::size_t cap) {
  CwTypeReport report;
  for (ElementSet& cls : discrete_type_classes(p)) {
    ComponentReport comp;
    const FinitePoset sub = p.Induced(cls);
    comp.elements = std::move(cls);
    if (count_chains(sub) <= cap) {
      const SimplicialComplex c = order_complex(sub, cap, Exec::kSerial);
      const CollapseCertificate cert = collapse_certify(c, false);
      if (cert.collapsible()) {
        comp.status = ComponentStatus::kContractible;
        comp.evidence = CertificateKindName(cert.kind);
        report.components.push_back(std::move(comp));
        continue;
      }
      comp.reduced_homology = homology_groups(c, true);
    } else {
      comp.reduced_homology = order_complex_homology(sub, true, cap);
    }
    comp.evidence = "reduced homology";
    comp.status = comp.reduced_homology.trivial() ? ComponentStatus::kInconclusive : ComponentStatus::kObstructed;
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace tphi
