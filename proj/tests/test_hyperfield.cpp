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
#include "tphi/hyperfield.hpp"

using namespace tphi;

namespace {

TPhiValue U(std::int64_t p, std::int64_t q) { return TPhiValue::Unit(p, q); }
const TPhiValue Z = TPhiValue::Zero();

}  // namespace

TEST_CASE("angles are canonical") {
  CHECK(PhaseAngle(3, 2) == PhaseAngle(1, 2));
  CHECK(PhaseAngle(-1, 4) == PhaseAngle(3, 4));
  CHECK(PhaseAngle(2, 4).den() == 2);
  CHECK(PhaseAngle(0, 5).ToString() == "0/1");
  CHECK(U(7, 3).ToString() == "1/3");
}

TEST_CASE("neg") {
  CHECK(neg(U(0, 1)) == U(1, 2));
  CHECK(neg(Z) == Z);
  CHECK(neg(U(1, 4)) == U(3, 4));
}

TEST_CASE("mul") {
  CHECK(U(1, 3) * U(1, 2) == U(5, 6));
  CHECK(Z * U(1, 7) == Z);
  CHECK(U(2, 3) * U(2, 3) == U(1, 3));
}

TEST_CASE("value text round trip") {
  CHECK(TPhiValue::Parse("0") == Z);
  CHECK(TPhiValue::Parse("3/4") == U(3, 4));
  CHECK(TPhiValue::Parse("2/4") == U(1, 2));
  CHECK_THROWS_AS(TPhiValue::Parse("x"), Error);
  CHECK_THROWS_AS(TPhiValue::Parse("1/0"), Error);
  for (const TPhiValue& v : DiscreteValues(12)) CHECK(TPhiValue::Parse(v.ToString()) == v);
}

TEST_CASE("values order with Zero first") {
  CHECK(Z < U(0, 1));
  CHECK(U(0, 1) < U(1, 4));
  const auto vals = DiscreteValues(4);
  REQUIRE(vals.size() == 5);
  CHECK(vals[0] == Z);
  CHECK(vals[2] == U(1, 4));
}

TEST_CASE("boxplus_pair defining cases") {
  CHECK(boxplus_pair(U(1, 4), Z) == ArcSet::Point(PhaseAngle(1, 4)));
  const ArcSet anti = boxplus_pair(U(0, 1), U(1, 2));
  CHECK(anti.contains_zero());
  CHECK(anti.full_circle());
  CHECK(anti.ToString() == "FULL +0");
  const ArcSet arc = boxplus_pair(U(0, 1), U(1, 4));
  CHECK(arc.ToString() == "[0/1,1/4]");
  CHECK(boxplus_pair(U(1, 4), U(0, 1)) == arc);
  CHECK(boxplus_pair(U(1, 3), U(1, 3)) == ArcSet::Point(PhaseAngle(1, 3)));
  CHECK(boxplus_pair(Z, Z) == ArcSet::ZeroOnly());
  // Shortest arc across angle zero.
  CHECK(boxplus_pair(U(7, 8), U(1, 8)).ToString() == "[7/8,1/8]");
}

TEST_CASE("boxplus_fold") {
  CHECK(boxplus_fold(std::vector<TPhiValue>{U(0, 1)}) == ArcSet::Point(PhaseAngle(0, 1)));
  CHECK(boxplus_fold(std::vector<TPhiValue>{U(0, 1), U(1, 4)}).ToString() == "[0/1,1/4]");
  CHECK(boxplus_fold(std::vector<TPhiValue>{U(0, 1), U(1, 2), U(1, 4)}) == ArcSet::FullWithZero());
  CHECK(boxplus_fold(std::vector<TPhiValue>{U(0, 1), U(1, 3), U(2, 3)}) == ArcSet::FullWithZero());
  CHECK(boxplus_fold(std::vector<TPhiValue>{U(0, 1), U(1, 8), U(1, 4)}).ToString() == "[0/1,1/4]");
  CHECK_THROWS_AS(boxplus_fold(std::vector<TPhiValue>{}), Error);
  try {
    boxplus_fold(std::vector<TPhiValue>{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptySum);
  }
}

TEST_CASE("contains_zero examples") {
  CHECK(contains_zero(std::vector<TPhiValue>{U(0, 1), U(1, 2), U(1, 4)}));
  CHECK_FALSE(contains_zero(std::vector<TPhiValue>{U(0, 1), U(1, 4)}));
  CHECK(contains_zero(std::vector<TPhiValue>{U(0, 1), U(1, 3), U(2, 3)}));
  CHECK_FALSE(contains_zero(std::vector<TPhiValue>{U(0, 1)}));
  CHECK(contains_zero(std::vector<TPhiValue>{Z, Z}));
  CHECK_FALSE(contains_zero(std::vector<TPhiValue>{U(1, 5), Z, U(1, 5)}));
  CHECK_THROWS_AS(contains_zero(std::vector<TPhiValue>{}), Error);
}

TEST_CASE("ArcSet canonical form and text") {
  const ArcSet merged = ArcSet::FromArcs(false, {{PhaseAngle(0, 1), Turns(1, 4)}, {PhaseAngle(1, 4), Turns(1, 4)}});
  CHECK(merged.ToString() == "[0/1,1/2]");
  const ArcSet wrapped = ArcSet::FromArcs(true, {{PhaseAngle(3, 4), Turns(1, 2)}});
  CHECK(wrapped.ToString() == "[3/4,1/4] +0");
  const ArcSet full = ArcSet::FromArcs(false, {{PhaseAngle(0, 1), Turns(1, 2)}, {PhaseAngle(1, 2), Turns(1, 2)}});
  CHECK(full.full_circle());
  CHECK(full.arcs().empty());
  CHECK(ArcSet::ZeroOnly().ToString() == "+0");
  for (const ArcSet& s : {merged, wrapped, full, ArcSet::ZeroOnly(), ArcSet::FullWithZero(),
                          boxplus_pair(U(1, 3), U(1, 6)), ArcSet::Point(PhaseAngle(2, 7))}) {
    CHECK(ArcSet::Parse(s.ToString()) == s);
  }
  CHECK(ArcSet::Point(PhaseAngle(2, 7)).ToString() == "[2/7,2/7]");
  CHECK(merged.Contains(PhaseAngle(1, 8)));
  CHECK_FALSE(merged.Contains(PhaseAngle(5, 8)));
  CHECK_FALSE(merged.Contains(Z));
  CHECK(wrapped.Contains(Z));
}

TEST_CASE("scaling rotates arcs") {
  const ArcSet arc = boxplus_pair(U(0, 1), U(1, 4));
  CHECK(arc.Scaled(U(1, 2)).ToString() == "[1/2,3/4]");
  CHECK(arc.Negated() == boxplus_pair(U(1, 2), U(3, 4)));
  CHECK(arc.Scaled(Z) == ArcSet::ZeroOnly());
}

TEST_CASE("hyperfield axioms on small discretizations") {
  for (std::int64_t k : {1, 2, 3, 4, 6}) {
    CAPTURE(k);
    CHECK(oracle::HyperfieldAxiomFailures(k).empty());
  }
}

TEST_CASE("criterion agrees with the fold on TPhi_6 multisets") {
  const auto vals = DiscreteValues(6);
  for (std::size_t len = 1; len <= 4; ++len) {
    oracle::ForEachMultiset(vals, len, [&](const std::vector<TPhiValue>& w) {
      CHECK(contains_zero(w) == oracle::FoldContainsZero(w));
    });
  }
}

TEST_CASE("criterion is order independent on random words") {
  std::mt19937_64 rng(7);
  const auto vals = DiscreteValues(24);
  std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<TPhiValue> w(1 + trial % 6);
    for (auto& v : w) v = vals[pick(rng)];
    const bool expected = oracle::FoldContainsZero(w);
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(contains_zero(w) == expected);
    CHECK(oracle::FoldContainsZero(w) == expected);
  }
}
