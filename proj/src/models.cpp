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

#include "tphi/models.hpp"

#include <algorithm>
#include <set>

namespace tphi {

namespace {

std::uint64_t CheckedPower(std::uint64_t base, std::uint64_t exp, std::size_t cap, const char* what) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (acc > (cap + 1) / base) {
      throw Error(ErrorKind::kSizeCapExceeded, std::string(what) + " exceeds the cap of " + std::to_string(cap));
    }
    acc *= base;
  }
  return acc;
}

std::vector<TPhiValue> DecodeDigits(std::uint64_t index, std::size_t len, std::int64_t k) {
  std::vector<TPhiValue> out(len);
  const auto base = static_cast<std::uint64_t>(k) + 1;
  for (std::size_t i = len; i-- > 0;) {
    const std::uint64_t digit = index % base;
    index /= base;
    out[i] = digit == 0 ? TPhiValue::Zero() : TPhiValue::Root(static_cast<std::int64_t>(digit) - 1, k);
  }
  return out;
}

bool InDiscretization(const TPhiValue& v, std::int64_t k) { return v.is_zero() || k % v.angle().den() == 0; }

// `elems` must be sorted; relations come from zeroing proper subsets of each
// support and looking the result up.
FinitePoset CoordinatewisePoset(const std::vector<PhasedVector>& elems) {
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const PhasedVector& v : elems) labels.push_back(v.ToString());
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (std::size_t y = 0; y < elems.size(); ++y) {
    const std::vector<std::size_t> supp = elems[y].support();
    const std::uint64_t full = (std::uint64_t{1} << supp.size()) - 1;
    for (std::uint64_t keep = 1; keep < full; ++keep) {
      std::vector<TPhiValue> sub(elems[y].size(), TPhiValue::Zero());
      for (std::size_t b = 0; b < supp.size(); ++b) {
        if ((keep >> b) & 1U) sub[supp[b]] = elems[y][supp[b]];
      }
      const PhasedVector x(std::move(sub));
      auto it = std::lower_bound(elems.begin(), elems.end(), x);
      if (it != elems.end() && *it == x) {
        pairs.emplace_back(static_cast<ElementId>(it - elems.begin()), static_cast<ElementId>(y));
      }
    }
  }
  return FinitePoset::FromPairs(std::move(labels), pairs);
}

}  // namespace

void TPhiModelSpec::Validate() const {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be >= 1");
  if (family == Family::kGrassmannian && (r < 1 || r > n)) {
    throw Error(ErrorKind::kInvalidArgument, "need 1 <= r <= n");
  }
  if (family == Family::kPerp) {
    if (k % 2 != 0) throw Error(ErrorKind::kOddDiscretization, "perp models need an even k");
    if (vectors.empty()) throw Error(ErrorKind::kInvalidArgument, "perp models need at least one vector");
    for (const PhasedVector& v : vectors) {
      if (v.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::kLengthMismatch, "vector length differs from n");
      for (const TPhiValue& e : v.entries()) {
        if (!InDiscretization(e, k)) {
          throw Error(ErrorKind::kInvalidArgument, "entry " + e.ToString() + " is not a " + std::to_string(k) + "-th root of unity");
        }
      }
    }
  }
}

FinitePoset index_chain(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset::FromRelation(std::move(labels), [](ElementId a, ElementId b) { return a < b; });
}

MirroredPoset build_tphi_power(int n, std::int64_t k, std::size_t cap) {
  TPhiModelSpec{TPhiModelSpec::Family::kPower, n, k, 1, {}}.Validate();
  const std::uint64_t total = CheckedPower(static_cast<std::uint64_t>(k) + 1, static_cast<std::uint64_t>(n), cap,
                                           "(k+1)^n - 1 elements");
  std::vector<PhasedVector> elems;
  elems.reserve(total - 1);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    elems.emplace_back(DecodeDigits(idx, static_cast<std::size_t>(n), k));
  }
  std::vector<ElementId> mirror;
  mirror.reserve(elems.size());
  for (const PhasedVector& v : elems) mirror.push_back(static_cast<ElementId>(v.support_size() - 1));
  return MirroredPoset(CoordinatewisePoset(elems), index_chain(n), std::move(mirror));
}

PerpModel build_perp_poset(const std::vector<PhasedVector>& vs, std::int64_t k, std::size_t cap, Exec exec) {
  if (vs.empty()) throw Error(ErrorKind::kInvalidArgument, "perp models need at least one vector");
  const int n = static_cast<int>(vs.front().size());
  TPhiModelSpec{TPhiModelSpec::Family::kPerp, n, k, 1, vs}.Validate();
  std::vector<PhasedVector> elems = perp_enumerate(vs, k, exec, cap);
  if (elems.empty()) throw Error(ErrorKind::kEmptyPerp, "no vector of (TPhi_k)^n - {0} survives");

  std::set<int> sizes;
  for (const PhasedVector& v : elems) sizes.insert(static_cast<int>(v.support_size()));
  PerpModel model{MirroredPoset(FinitePoset(), FinitePoset(), {}), {}};
  std::vector<std::string> index_labels;
  std::vector<int> kept;
  for (int s = 1; s <= n; ++s) {
    if (sizes.count(s)) {
      kept.push_back(s);
      index_labels.push_back(std::to_string(s));
    } else {
      model.pruned_strata.push_back(s);
    }
  }
  FinitePoset index = FinitePoset::FromRelation(std::move(index_labels), [](ElementId a, ElementId b) { return a < b; });
  std::vector<ElementId> mirror;
  mirror.reserve(elems.size());
  for (const PhasedVector& v : elems) {
    auto pos = std::lower_bound(kept.begin(), kept.end(), static_cast<int>(v.support_size())) - kept.begin();
    mirror.push_back(static_cast<ElementId>(pos));
  }
  model.poset = MirroredPoset(CoordinatewisePoset(elems), std::move(index), std::move(mirror));
  return model;
}

std::vector<GPFunction> enum_grassmannian(int n, int r, std::int64_t k, std::size_t cap, Exec exec) {
  TPhiModelSpec{TPhiModelSpec::Family::kGrassmannian, n, k, r, {}}.Validate();
  const std::uint64_t m = Binomial(n, r);
  const std::uint64_t total = CheckedPower(static_cast<std::uint64_t>(k) + 1, m, cap, "(k+1)^C(n,r) candidates");
  const auto count = static_cast<std::int64_t>(total);
  std::vector<char> keep(static_cast<std::size_t>(count), 0);
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t idx = 1; idx < count; ++idx) {
    std::vector<TPhiValue> values = DecodeDigits(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(m), k);
    // Representatives only: the first non-Zero value must be the root 0/1.
    auto first = std::find_if(values.begin(), values.end(), [](const TPhiValue& v) { return v.is_unit(); });
    if (*first != TPhiValue::Unit(0, 1)) continue;
    GPFunction phi(n, r, std::move(values));
    keep[static_cast<std::size_t>(idx)] = gp_verify_all(phi, RelationSweep::kSubsets, Exec::kSerial).pass ? 1 : 0;
  }
  std::vector<GPFunction> out;
  for (std::int64_t idx = 1; idx < count; ++idx) {
    if (keep[static_cast<std::size_t>(idx)]) {
      out.emplace_back(n, r, DecodeDigits(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(m), k));
    }
  }
  return out;
}

HomologySummary expected_join_betti(int n, std::int64_t k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::kInvalidArgument, "need n >= 1 and k >= 1");
  HomologySummary h;
  h.reduced = true;
  std::uint64_t rank = 1;
  for (int i = 0; i < n; ++i) rank *= static_cast<std::uint64_t>(k - 1);
  for (int d = 0; d < n; ++d) h.dims.push_back({d, d == n - 1 ? rank : 0, {}});
  return h;
}

std::string discretization_caveat(const std::vector<PhasedVector>& vs, std::int64_t k) {
  const std::size_t n = vs.empty() ? 0 : vs.front().size();
  const long long sphere = 2 * (static_cast<long long>(n) - static_cast<long long>(vs.size())) - 1;
  return "caveat: this is the finite model over the " + std::to_string(k) +
         "-th roots of unity; its order complex need not have the homotopy type of the continuous perp set "
         "(for generic vectors a sphere of dimension " + std::to_string(sphere) +
         "), and homology computed here describes the finite model only";
}

}  // namespace tphi
