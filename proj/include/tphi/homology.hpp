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

// Integer simplicial homology through Smith normal form.
//
// Boundary matrices are reduced by sparse elimination on unit pivots first
// (machine integers, checked for overflow, with a GMP fallback); whatever is
// left without a unit entry goes through a dense GMP Smith normal form.

#ifndef TPHI_HOMOLOGY_HPP_
#define TPHI_HOMOLOGY_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tphi/complex.hpp"
#include "tphi/error.hpp"

namespace tphi {

using Integer = mpz_class;

// Sparse integer matrix stored by columns; entries are exact.
class IntegerMatrix {
 public:
  struct Entry {
    std::size_t row;
    Integer value;
  };

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static IntegerMatrix FromDense(const std::vector<std::vector<long>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  Integer At(std::size_t r, std::size_t c) const;
  // Inserts, overwrites or (for zero) erases an entry.
  void Set(std::size_t r, std::size_t c, const Integer& v);

  std::vector<std::vector<Integer>> ToDense() const;
  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool IsZero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;  // sorted by row
};

// Matrix of the boundary map from d-chains to (d-1)-chains with the
// orientation of the sorted vertex order: rows are (d-1)-simplices and
// columns d-simplices in the complex's order. d = 0 gives a 0 x n_0 matrix.
// Throws kDimOutOfRange unless 0 <= d <= dimension + 1.
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d);

// Non-zero invariant factors d_1 | d_2 | ..., all positive.
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

// Rank over the rationals.
std::size_t matrix_rank(const IntegerMatrix& m);

struct DimHomology {
  int dim = 0;
  std::uint64_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2 in divisibility order

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const DimHomology& o) const = default;
};

struct HomologySummary {
  bool reduced = false;
  std::vector<DimHomology> dims;  // ascending; dimension -1 only for the empty complex

  std::uint64_t betti(int d) const;
  std::vector<Integer> torsion(int d) const;
  bool trivial() const;
  // Sum of (-1)^d betti_d.
  std::int64_t euler() const;

  // One line per dimension: "H_k = Z^b + Z/t1 + ..." or "H_k = 0", with the
  // prefix "H~_" for reduced homology.
  std::vector<std::string> Lines() const;
  std::string ToText() const;

  bool operator==(const HomologySummary& o) const = default;
};

enum class Coefficients {
  kIntegers,   // full Smith normal form: Betti numbers and torsion
  kRationals,  // ranks only; torsion is not reported
};

HomologySummary homology_groups(const SimplicialComplex& c, bool reduced,
                                Coefficients coeffs = Coefficients::kIntegers,
                                Exec exec = Exec::kParallel);

}  // namespace tphi

#endif  // TPHI_HOMOLOGY_HPP_
