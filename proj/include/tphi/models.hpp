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

// Finite model families built from TPhi_k, the k-th roots of unity with 0:
// powers (TPhi_k)^n - {0}, perp subposets and the strong Grassmannian.

#ifndef TPHI_MODELS_HPP_
#define TPHI_MODELS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "tphi/error.hpp"
#include "tphi/homology.hpp"
#include "tphi/phased.hpp"
#include "tphi/poset.hpp"

namespace tphi {

struct TPhiModelSpec {
  enum class Family { kPower, kPerp, kGrassmannian };
  Family family = Family::kPower;
  int n = 1;
  std::int64_t k = 1;
  int r = 1;                         // grassmannian only
  std::vector<PhasedVector> vectors;  // perp only

  // Throws kInvalidArgument / kOddDiscretization on a malformed spec.
  void Validate() const;
};

// Index poset [n] = {1 < 2 < ... < n}.
FinitePoset index_chain(int n);

// (TPhi_k)^n - {0} ordered coordinatewise, mirrored to [n] by support size.
// Elements appear in lexicographic order and are labelled by their vector text.
MirroredPoset build_tphi_power(int n, std::int64_t k, std::size_t cap = kDefaultCap);

struct PerpModel {
  MirroredPoset poset;
  std::vector<int> pruned_strata;  // support sizes with no surviving element
};

// The induced subposet of (TPhi_k)^n - {0} on the perp set of vs, with the
// mirror restricted to the support sizes that occur. Throws kEmptyPerp.
PerpModel build_perp_poset(const std::vector<PhasedVector>& vs, std::int64_t k,
                           std::size_t cap = kDefaultCap, Exec exec = Exec::kParallel);

// Normalized strong Grassmann-Pluecker functions with values in TPhi_k, one
// per scalar class, in lexicographic order of their stored values.
std::vector<GPFunction> enum_grassmannian(int n, int r, std::int64_t k, std::size_t cap = kDefaultCap,
                                          Exec exec = Exec::kParallel);

// Reduced homology of the n-fold join of k-point sets: Z^((k-1)^n) in degree
// n-1 and zero below.
HomologySummary expected_join_betti(int n, std::int64_t k);

// Text explaining that finite perp models need not have the homotopy type of
// their continuous counterparts.
std::string discretization_caveat(const std::vector<PhasedVector>& vs, std::int64_t k);

}  // namespace tphi

#endif  // TPHI_MODELS_HPP_
