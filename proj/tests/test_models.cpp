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


#include <doctest.h>

#include "support/oracles.hpp"
#include "tphi/mccord.hpp"
#include "tphi/models.hpp"

using namespace tphi;

namespace {

PhasedVector V(const char* text) { return PhasedVector::Parse(text); }

std::uint64_t Pow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// Join of n point sets of size k with vertices c<i>_<j>.
SimplicialComplex JoinOfPoints(int n, std::int64_t k) {
  SimplicialComplex j = point_set(static_cast<std::size_t>(k), "c1_");
  for (int i = 2; i <= n; ++i) j = join(j, point_set(static_cast<std::size_t>(k), "c" + std::to_string(i) + "_"));
  return j;
}

// The face of the join corresponding to a vector: coordinate i with value
// e^{2 pi i j/k} becomes vertex c<i>_<j>.
std::string FaceLabel(const PhasedVector& v, std::int64_t k) {
  std::vector<std::string> names;
  for (std::size_t i : v.support()) {
    const PhaseAngle& a = v[i].angle();
    const std::int64_t j = a.num() * (k / a.den());
    names.push_back("c" + std::to_string(i + 1) + "_" + std::to_string(j));
  }
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

}  // namespace

TEST_CASE("model spec validation") {
  CHECK_THROWS_AS((TPhiModelSpec{TPhiModelSpec::Family::kPower, 0, 2, 1, {}}.Validate()), Error);
  CHECK_THROWS_AS((TPhiModelSpec{TPhiModelSpec::Family::kPower, 2, 0, 1, {}}.Validate()), Error);
  CHECK_THROWS_AS((TPhiModelSpec{TPhiModelSpec::Family::kPerp, 2, 3, 1, {V("0/1,0/1")}}.Validate()), Error);
  CHECK_THROWS_AS((TPhiModelSpec{TPhiModelSpec::Family::kPerp, 2, 2, 1, {V("0/1,1/4")}}.Validate()), Error);
  CHECK_THROWS_AS((TPhiModelSpec{TPhiModelSpec::Family::kGrassmannian, 2, 2, 3, {}}.Validate()), Error);
  CHECK_NOTHROW((TPhiModelSpec{TPhiModelSpec::Family::kPerp, 2, 4, 1, {V("0/1,1/4")}}.Validate()));
}

TEST_CASE("build_tphi_power examples") {
  const MirroredPoset mp = build_tphi_power(2, 2);
  CHECK(mp.poset().size() == 8);
  CHECK(mp.Stratum(0).size() == 4);
  CHECK(mp.Stratum(1).size() == 4);
  const MirroredPoset line = build_tphi_power(1, 5);
  CHECK(line.poset().size() == 5);
  CHECK(line.poset().RelationCount() == 0);
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const MirroredPoset m = build_tphi_power(n, k);
      CHECK(m.poset().size() == Pow(k + 1, n) - 1);
      CHECK(mirror_check(m).pass);
      CHECK(geometric_discrete_check(m).pass);
    }
  }
  CHECK_THROWS_AS(build_tphi_power(3, 9, 100), Error);
  try {
    build_tphi_power(3, 9, 100);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSizeCapExceeded);
  }
}

TEST_CASE("power order is coordinatewise") {
  const MirroredPoset mp = build_tphi_power(3, 2);
  const FinitePoset& p = mp.poset();
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) {
      CHECK(p.LessEq(a, b) == V(p.label(a).c_str()).LessEq(V(p.label(b).c_str())));
    }
  }
}

TEST_CASE("build_perp_poset examples") {
  const PerpModel a = build_perp_poset({V("0/1,0/1")}, 2);
  CHECK(a.poset.poset().size() == 2);
  CHECK(a.poset.poset().RelationCount() == 0);
  CHECK(a.pruned_strata == std::vector<int>{1});
  CHECK(mirror_check(a.poset).pass);
  const PerpModel b = build_perp_poset({V("0/1,0/1,0/1")}, 2);
  CHECK(b.poset.poset().size() == 12);
  CHECK(b.poset.poset().Covers().size() == 12);
  CHECK(b.pruned_strata == std::vector<int>{1});
  const PerpModel c = build_perp_poset({V("0/1,0/1")}, 4);
  CHECK(c.poset.poset().size() == 4);
  CHECK(c.poset.poset().RelationCount() == 0);
  CHECK_THROWS_AS(build_perp_poset({V("0/1,0"), V("0,0/1")}, 2), Error);
  try {
    build_perp_poset({V("0/1,0"), V("0,0/1")}, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyPerp);
  }
  CHECK_THROWS_AS(build_perp_poset({V("0/1,0/1")}, 3), Error);
}

TEST_CASE("perp poset is the induced subposet of the power on the brute-force filter") {
  const std::vector<std::vector<PhasedVector>> cases{
      {V("0/1,0/1,0/1")}, {V("0/1,1/4,1/2")}, {V("0/1,0/1,0/1,0/1")}, {V("0/1,0/1,0/1"), V("0/1,1/2,0")}};
  for (const auto& vs : cases) {
    for (std::int64_t k : {2, 4}) {
      if (k == 2 && vs.front().ToString().find("/4") != std::string::npos) continue;
      const FinitePoset perp = build_perp_poset(vs, k).poset.poset();
      const FinitePoset power = build_tphi_power(static_cast<int>(vs.front().size()), k).poset();
      std::vector<std::string> expected;
      ElementSet ids;
      for (ElementId e = 0; e < power.size(); ++e) {
        if (perp_membership(vs, V(power.label(e).c_str()))) ids.push_back(e);
      }
      const auto brute = oracle::BrutePerp(vs, k);
      REQUIRE(brute.size() == ids.size());
      REQUIRE(perp.size() == ids.size());
      const FinitePoset induced = power.Induced(ids);
      for (ElementId a = 0; a < perp.size(); ++a) {
        CHECK(perp.label(a) == induced.label(a));
        CHECK(perp.label(a) == brute[a].ToString());
        for (ElementId b = 0; b < perp.size(); ++b) CHECK(perp.Less(a, b) == induced.Less(a, b));
      }
    }
  }
}

TEST_CASE("expected_join_betti examples") {
  CHECK(expected_join_betti(2, 2).betti(1) == 1);
  CHECK(expected_join_betti(2, 2).betti(0) == 0);
  CHECK(expected_join_betti(1, 3).betti(0) == 2);
  CHECK(expected_join_betti(3, 2).betti(2) == 1);
  CHECK(expected_join_betti(3, 2).Lines() == std::vector<std::string>{"H~_0 = 0", "H~_1 = 0", "H~_2 = Z^1"});
}

TEST_CASE("power order complexes have the homology of the join") {
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t k = 1; Pow(k + 1, n) - 1 <= 300; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const FinitePoset p = build_tphi_power(n, k).poset();
      CHECK(homology_groups(order_complex(p), true) == expected_join_betti(n, k));
    }
  }
}

TEST_CASE("power order complex is the barycentric subdivision of the join") {
  for (int n = 1; n <= 3; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const FinitePoset p = build_tphi_power(n, k).poset();
      std::vector<std::string> relabel;
      for (const std::string& l : p.labels()) relabel.push_back(FaceLabel(V(l.c_str()), k));
      const SimplicialComplex delta = order_complex(p).Relabeled(relabel);
      const SimplicialComplex join_k = JoinOfPoints(n, k);
      CHECK(delta.CanonicalLines() == barycentric_subdivision(join_k).CanonicalLines());
      // As a face poset, the power recovers the join itself.
      const auto face = face_poset_complex(p);
      REQUIRE(face.has_value());
      CHECK(face->total() == join_k.total());
      CHECK(homology_groups(*face, true) == homology_groups(join_k, true));
    }
  }
}

TEST_CASE("enum_grassmannian examples") {
  CHECK(enum_grassmannian(3, 1, 2).size() == 13);
  CHECK(enum_grassmannian(2, 1, 2).size() == 4);
  CHECK(enum_grassmannian(3, 2, 2).size() == 13);
  CHECK_THROWS_AS(enum_grassmannian(6, 3, 4, 1000), Error);
  CHECK_THROWS_AS(enum_grassmannian(3, 4, 2), Error);
}

TEST_CASE("enum_grassmannian equals the brute-force filter") {
  for (auto [n, r, k] : {std::tuple{3, 2, 2}, std::tuple{3, 1, 2}, std::tuple{2, 2, 4}, std::tuple{4, 2, 2},
                         std::tuple{3, 2, 4}, std::tuple{4, 3, 2}}) {
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(k);
    const auto serial = enum_grassmannian(n, r, k, kDefaultCap, Exec::kSerial);
    const auto parallel = enum_grassmannian(n, r, k, kDefaultCap, Exec::kParallel);
    CHECK(serial == parallel);
    std::set<std::vector<TPhiValue>> got;
    for (const GPFunction& phi : serial) {
      CHECK(gp_verify_all(phi).pass);
      CHECK(gp_normalize(phi) == phi);
      got.insert(phi.values());
    }
    CHECK(got.size() == serial.size());
    CHECK(got == oracle::BruteGrassmannian(n, r, k));
    CHECK(std::is_sorted(serial.begin(), serial.end()));
  }
}

TEST_CASE("discretization caveat") {
  const std::string text = discretization_caveat({V("0/1,0/1")}, 4);
  CHECK(text.find("caveat") != std::string::npos);
  CHECK(text.find("dimension 1") != std::string::npos);
}
