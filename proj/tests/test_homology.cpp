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

#include <random>

#include "support/oracles.hpp"
#include "tphi/homology.hpp"
#include "tphi/models.hpp"

using namespace tphi;

namespace {

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

SimplicialComplex Rp2() {
  return SimplicialComplex::FromFacets({"1", "2", "3", "4", "5", "6"},
                                       {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex Octahedron() { return join(join(point_set(2, "a"), point_set(2, "b")), point_set(2, "c")); }

std::vector<SimplicialComplex> Samples() {
  return {Cycle(8), Octahedron(), Rp2(), point_set(4), SimplicialComplex::FromFacets({"a", "b", "c"}, {{0, 1, 2}}),
          join(Rp2(), point_set(2)), order_complex(build_tphi_power(2, 3).poset()), SimplicialComplex()};
}

std::vector<Integer> Ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("boundary_matrix examples") {
  const SimplicialComplex edge = SimplicialComplex::FromFacets({"v0", "v1"}, {{0, 1}});
  const IntegerMatrix d1 = boundary_matrix(edge, 1);
  REQUIRE(d1.rows() == 2);
  REQUIRE(d1.cols() == 1);
  CHECK(d1.At(0, 0) == -1);
  CHECK(d1.At(1, 0) == 1);
  const SimplicialComplex tri = Cycle(3);
  CHECK(matrix_rank(boundary_matrix(tri, 1)) == 2);
  const IntegerMatrix above = boundary_matrix(tri, 2);
  CHECK(above.cols() == 0);
  CHECK(above.rows() == 3);
  CHECK(boundary_matrix(tri, 0).rows() == 0);
  CHECK_THROWS_AS(boundary_matrix(tri, 3), Error);
  CHECK_THROWS_AS(boundary_matrix(tri, -1), Error);
}

TEST_CASE("boundary of a boundary vanishes") {
  for (const SimplicialComplex& c : Samples()) {
    for (int d = 1; d <= c.dimension() + 1; ++d) {
      CHECK((boundary_matrix(c, d - 1) * boundary_matrix(c, d)).IsZero());
    }
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntegerMatrix::FromDense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Ints({1, 1, 1}));
  CHECK(smith_normal_form(IntegerMatrix::FromDense({{2, 0}, {0, 3}})) == Ints({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix::FromDense({{0, 0}, {0, 0}})).empty());
  CHECK(smith_normal_form(IntegerMatrix::FromDense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == Ints({2, 6, 12}));
  CHECK(smith_normal_form(IntegerMatrix(0, 5)).empty());
}

TEST_CASE("SNF invariants on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng);
    const int cols = trial % 2 ? rows : dim(rng);
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols));
    for (auto& row : dense) {
      for (long& x : row) x = trial % 3 == 0 && entry(rng) > 3 ? 0 : entry(rng);
    }
    const IntegerMatrix m = IntegerMatrix::FromDense(dense);
    const std::vector<Integer> f = smith_normal_form(m);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] > 0);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
    }
    CHECK(f.size() == matrix_rank(m));
    if (rows == cols) {
      const Integer det = oracle::CofactorDeterminant(dense);
      Integer prod = 1;
      for (const Integer& x : f) prod *= x;
      if (det == 0) {
        CHECK(f.size() < static_cast<std::size_t>(rows));
      } else {
        CHECK(f.size() == static_cast<std::size_t>(rows));
        CHECK(prod == abs(det));
      }
    }
  }
}

TEST_CASE("entries beyond machine integers stay exact") {
  const long big = 3037000499L;  // about sqrt(2^63)
  const IntegerMatrix m = IntegerMatrix::FromDense({{big, big - 1, 7}, {big + 1, big, 5}, {3, 2, big}});
  const std::vector<long> row0{big, big - 1, 7};
  const std::vector<long> row1{big + 1, big, 5};
  const std::vector<long> row2{3, 2, big};
  const Integer det = oracle::CofactorDeterminant({row0, row1, row2});
  Integer prod = 1;
  for (const Integer& x : smith_normal_form(m)) prod *= x;
  CHECK(prod == abs(det));
}

TEST_CASE("homology examples") {
  const HomologySummary c8 = homology_groups(Cycle(8), false);
  CHECK(c8.betti(0) == 1);
  CHECK(c8.betti(1) == 1);
  CHECK(c8.Lines() == std::vector<std::string>{"H_0 = Z^1", "H_1 = Z^1"});
  const HomologySummary oct = homology_groups(Octahedron(), false);
  CHECK(oct.betti(0) == 1);
  CHECK(oct.betti(1) == 0);
  CHECK(oct.betti(2) == 1);
  const HomologySummary rp2 = homology_groups(Rp2(), false);
  CHECK(rp2.betti(1) == 0);
  CHECK(rp2.torsion(1) == Ints({2}));
  CHECK(rp2.betti(2) == 0);
  CHECK(rp2.Lines()[1] == "H_1 = Z/2");
  const HomologySummary red = homology_groups(Cycle(8), true);
  CHECK(red.Lines() == std::vector<std::string>{"H~_0 = 0", "H~_1 = Z^1"});
  CHECK(homology_groups(point_set(3), true).betti(0) == 2);
  const HomologySummary empty = homology_groups(SimplicialComplex(), true);
  REQUIRE(empty.dims.size() == 1);
  CHECK(empty.dims[0].dim == -1);
  CHECK(empty.betti(-1) == 1);
  CHECK(homology_groups(SimplicialComplex(), false).dims.empty());
  const HomologySummary mixed = homology_groups(join(Rp2(), point_set(2)), false);
  CHECK(mixed.torsion(2) == Ints({2}));
  CHECK(mixed.Lines()[2] == "H_2 = Z/2");
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
  for (const SimplicialComplex& c : Samples()) {
    CHECK(homology_groups(c, false).euler() == euler_characteristic(c));
  }
}

TEST_CASE("rational coefficients and parallel execution") {
  for (const SimplicialComplex& c : Samples()) {
    const HomologySummary z = homology_groups(c, false, Coefficients::kIntegers, Exec::kSerial);
    CHECK(homology_groups(c, false, Coefficients::kIntegers, Exec::kParallel) == z);
    const HomologySummary q = homology_groups(c, false, Coefficients::kRationals);
    for (const DimHomology& d : q.dims) {
      CHECK(d.torsion.empty());
      CHECK(d.betti == z.betti(d.dim));
    }
  }
}

TEST_CASE("homology is invariant under barycentric subdivision") {
  for (const SimplicialComplex& c : Samples()) {
    if (c.total() > 300) continue;
    CHECK(homology_groups(barycentric_subdivision(c), false) == homology_groups(c, false));
  }
}

TEST_CASE("reduced Betti numbers of joins convolve") {
  const std::vector<SimplicialComplex> cs{point_set(3), Cycle(5), Octahedron(), point_set(1)};
  for (const auto& a : cs) {
    for (const auto& b : cs) {
      const HomologySummary ha = homology_groups(a, true);
      const HomologySummary hb = homology_groups(b, true);
      const HomologySummary hj = homology_groups(join(a, b), true);
      for (const DimHomology& d : hj.dims) {
        std::uint64_t expected = 0;
        for (const DimHomology& x : ha.dims) expected += x.betti * hb.betti(d.dim - 1 - x.dim);
        CHECK(d.betti == expected);
      }
    }
  }
}
