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

#include <sstream>

#include "support/oracles.hpp"
#include "tphi/complex.hpp"
#include "tphi/homology.hpp"
#include "tphi/models.hpp"

using namespace tphi;

namespace {

FinitePoset Chain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return FinitePoset::FromRelation(labels, [](ElementId a, ElementId b) { return a < b; });
}

SimplicialComplex Cycle(int n) {
  std::vector<std::string> labels;
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    Simplex e{static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return SimplicialComplex::FromFacets(labels, edges);
}

}  // namespace

TEST_CASE("complex construction and lookup") {
  const SimplicialComplex tri = SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(tri.total() == 7);
  CHECK(tri.dimension() == 2);
  const VertexId ab[] = {0, 1};
  CHECK(tri.Contains(ab));
  CHECK(tri.Maximal() == std::vector<Simplex>{{0, 1, 2}});
  CHECK(SimplicialComplex().dimension() == -1);
  CHECK(Cycle(8).count(1) == 8);
}

TEST_CASE("order_complex examples") {
  const SimplicialComplex chain = order_complex(Chain(3));
  CHECK(chain.total() == 7);
  CHECK(chain.dimension() == 2);
  const SimplicialComplex anti = order_complex(build_poset({"a", "b", "c"}, {}));
  CHECK(anti.total() == 3);
  CHECK(anti.dimension() == 0);
  const SimplicialComplex t = order_complex(build_tphi_power(2, 2).poset());
  CHECK(t.count(0) == 8);
  CHECK(t.count(1) == 8);
  CHECK(t.dimension() == 1);
  CHECK(oracle::IsSingleCycle(t));
  CHECK_THROWS_AS(order_complex(Chain(20), 1000), Error);
}

TEST_CASE("order complex sizes match the brute-force chain counter") {
  const std::vector<FinitePoset> posets{Chain(5), build_tphi_power(2, 3).poset(), build_tphi_power(3, 1).poset(),
                                        build_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}}),
                                        build_perp_poset({PhasedVector::Parse("0/1,0/1,0/1")}, 2).poset.poset()};
  for (const FinitePoset& p : posets) {
    const std::uint64_t expected = oracle::BruteChainCount(p);
    CHECK(count_chains(p) == expected);
    CHECK(order_complex(p, kDefaultCap, Exec::kSerial).total() == expected);
    CHECK(order_complex(p, kDefaultCap, Exec::kParallel) == order_complex(p, kDefaultCap, Exec::kSerial));
    CHECK(order_complex(p).count(0) == p.size());
  }
}

TEST_CASE("order complex is preserved by duality") {
  for (const FinitePoset& p : {Chain(4), build_tphi_power(2, 3).poset(), build_tphi_power(3, 2).poset()}) {
    CHECK(order_complex(p) == order_complex(p.Opposite()));
  }
}

TEST_CASE("join examples") {
  const SimplicialComplex s0 = point_set(2);
  const SimplicialComplex square = join(s0, s0);
  CHECK(square.count(0) == 4);
  CHECK(square.count(1) == 4);
  CHECK(oracle::IsSingleCycle(square));
  const SimplicialComplex cone = join(Cycle(5), point_set(1, "apex"));
  CHECK(find_cone_apex(cone).has_value());
  const SimplicialComplex octa = join(join(s0, s0), s0);
  CHECK(octa.count(2) == 8);
  CHECK(euler_characteristic(octa) == 2);
  CHECK(octa.dimension() == 2);
}

TEST_CASE("join dimension and Euler characteristic") {
  const std::vector<SimplicialComplex> cs{point_set(3), Cycle(4), SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}}),
                                          join(point_set(2), point_set(2))};
  for (const auto& a : cs) {
    for (const auto& b : cs) {
      const SimplicialComplex j = join(a, b);
      CHECK(j.dimension() == a.dimension() + b.dimension() + 1);
      const std::int64_t ea = euler_characteristic(a);
      const std::int64_t eb = euler_characteristic(b);
      CHECK(euler_characteristic(j) == ea + eb - ea * eb);
    }
  }
}

TEST_CASE("Euler characteristic examples") {
  CHECK(euler_characteristic(Cycle(8)) == 0);
  CHECK(euler_characteristic(SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}})) == 1);
}

TEST_CASE("canonical text round trip") {
  const SimplicialComplex t = order_complex(build_tphi_power(2, 2).poset());
  const std::string text = t.ToText();
  std::istringstream in(text);
  const SimplicialComplex back = SimplicialComplex::Parse(in);
  CHECK(back.ToText() == text);
  CHECK(back.total() == t.total());
  std::istringstream faces("a b c\n");
  CHECK(SimplicialComplex::Parse(faces).total() == 7);
  const auto lines = SimplicialComplex::FromFacets({"b", "a"}, {{0, 1}}).CanonicalLines();
  CHECK(lines == std::vector<std::string>{"a", "a b", "b"});
}

TEST_CASE("face poset and subdivision") {
  const SimplicialComplex tri = SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}});
  const FinitePoset fp = face_poset(tri);
  CHECK(fp.size() == 7);
  CHECK(fp.Has("{a,b}"));
  const SimplicialComplex sd = barycentric_subdivision(tri);
  CHECK(sd.count(0) == 7);
  CHECK(sd.count(2) == 6);
  CHECK(euler_characteristic(sd) == 1);
}

TEST_CASE("collapse certificates") {
  const SimplicialComplex cone = join(Cycle(6), point_set(1, "apex"));
  const CollapseCertificate c = collapse_certify(cone);
  CHECK(c.kind == CollapseCertificate::Kind::kCone);
  REQUIRE(c.apex.has_value());
  CHECK(cone.labels()[*c.apex] == "apex0");
  CHECK(std::string(CertificateKindName(c.kind)) == "cone-apex");

  const CollapseCertificate cyc = collapse_certify(Cycle(8));
  CHECK(cyc.kind == CollapseCertificate::Kind::kInconclusive);
  CHECK_FALSE(cyc.collapsible());

  const CollapseCertificate simplex = collapse_certify(SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}}));
  CHECK(simplex.collapsible());
  CHECK(simplex.step_count == 3);
  CHECK(simplex.steps.size() == 3);

  // A path is not a cone but collapses.
  const SimplicialComplex path = SimplicialComplex::FromFacets({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  const CollapseCertificate pc = collapse_certify(path);
  CHECK(pc.kind == CollapseCertificate::Kind::kCollapse);
  CHECK(std::string(CertificateKindName(pc.kind)) == "collapse-sequence");
  CHECK(pc.remaining == 1);
}

TEST_CASE("collapsible complexes have the homology of a point") {
  const std::vector<SimplicialComplex> cs{
      SimplicialComplex::FromFacets({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {1, 3}}),
      SimplicialComplex::FromFacets({"a", "b", "c", "d", "e"}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}),
      order_complex(Chain(4)), join(Cycle(5), point_set(1))};
  for (const auto& c : cs) {
    const CollapseCertificate cert = collapse_certify(c);
    REQUIRE(cert.collapsible());
    CHECK(homology_groups(c, true).trivial());
    if (cert.kind == CollapseCertificate::Kind::kCollapse) {
      // Replaying the steps leaves one vertex.
      CHECK(c.total() - 2 * cert.steps.size() == 1);
    }
  }
}
