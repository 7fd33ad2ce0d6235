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

#include "tphi/homology.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace tphi {

namespace {

struct OverflowSignal {};

// Checked machine-integer arithmetic for the elimination kernel.
inline bool IsUnit(std::int64_t v) { return v == 1 || v == -1; }
inline bool IsUnit(const Integer& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }
inline bool IsZero(std::int64_t v) { return v == 0; }
inline bool IsZero(const Integer& v) { return sgn(v) == 0; }

// x - f * y
inline std::int64_t MulSub(std::int64_t x, std::int64_t f, std::int64_t y) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(f, y, &prod) || __builtin_sub_overflow(x, prod, &out)) throw OverflowSignal{};
  return out;
}
inline Integer MulSub(const Integer& x, const Integer& f, const Integer& y) { return x - f * y; }

inline std::int64_t Mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowSignal{};
  return out;
}
inline Integer Mul(const Integer& a, const Integer& b) { return a * b; }

inline Integer ToInteger(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer ToInteger(const Integer& v) { return v; }

template <class T>
struct RowEntry {
  std::uint32_t col;
  T value;
};

template <class T>
using SparseRows = std::vector<std::vector<RowEntry<T>>>;

// Result of eliminating unit pivots: how many were found and the leftover
// block, which has no unit entries left to pivot on.
struct Reduction {
  std::size_t unit_pivots = 0;
  std::vector<std::vector<Integer>> residual;
};

template <class T>
const T* FindIn(const std::vector<RowEntry<T>>& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const RowEntry<T>& e, std::uint32_t c) { return e.col < c; });
  return it != row.end() && it->col == col ? &it->value : nullptr;
}

template <class T>
Reduction EliminateUnitPivots(SparseRows<T> rows, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::uint32_t> col_count(ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (const auto& e : rows[i]) {
      col_rows[e.col].push_back(static_cast<std::uint32_t>(i));
      ++col_count[e.col];
    }
  }
  std::vector<char> row_alive(nrows, 1);
  std::vector<char> col_alive(ncols, 1);

  using Item = std::pair<std::uint32_t, std::uint32_t>;  // (count, col)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t j = 0; j < ncols; ++j) heap.emplace(col_count[j], static_cast<std::uint32_t>(j));

  Reduction out;
  std::vector<RowEntry<T>> merged;
  std::vector<std::uint32_t> live;
  std::vector<std::uint32_t> deferred;

  auto pivot = [&](std::uint32_t pi, std::uint32_t pj) {
    const std::vector<RowEntry<T>>& prow = rows[pi];
    const T p = *FindIn(prow, pj);
    for (std::uint32_t i2 : live) {
      if (i2 == pi) continue;
      auto& row = rows[i2];
      const T* a = FindIn(row, pj);
      if (a == nullptr) continue;
      // row -= (a * p) * prow, using p^-1 == p for a unit.
      const T factor = Mul(*a, p);
      merged.clear();
      merged.reserve(row.size() + prow.size());
      std::size_t x = 0, y = 0;
      while (x < row.size() || y < prow.size()) {
        if (y == prow.size() || (x < row.size() && row[x].col < prow[y].col)) {
          merged.push_back(std::move(row[x++]));
        } else if (x == row.size() || prow[y].col < row[x].col) {
          T v = MulSub(T(0), factor, prow[y].value);
          const std::uint32_t c = prow[y++].col;
          ++col_count[c];
          col_rows[c].push_back(i2);
          merged.push_back({c, std::move(v)});
        } else {
          T v = MulSub(row[x].value, factor, prow[y].value);
          const std::uint32_t c = row[x].col;
          ++x;
          ++y;
          if (IsZero(v)) {
            --col_count[c];
          } else {
            merged.push_back({c, std::move(v)});
          }
        }
      }
      row.swap(merged);
    }
    for (const auto& e : prow) --col_count[e.col];
    for (const auto& e : prow) {
      if (col_alive[e.col] && e.col != pj) heap.emplace(col_count[e.col], e.col);
    }
    row_alive[pi] = 0;
    col_alive[pj] = 0;
    rows[pi].clear();
    rows[pi].shrink_to_fit();
    ++out.unit_pivots;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    while (!heap.empty()) {
      auto [cnt, j] = heap.top();
      heap.pop();
      if (!col_alive[j] || cnt != col_count[j]) continue;
      if (cnt == 0) {
        col_alive[j] = 0;
        continue;
      }
      // Live rows that really hold column j.
      auto& cr = col_rows[j];
      std::sort(cr.begin(), cr.end());
      cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
      live.clear();
      std::uint32_t best = 0;
      std::size_t best_len = std::numeric_limits<std::size_t>::max();
      for (std::uint32_t i : cr) {
        if (!row_alive[i]) continue;
        const T* v = FindIn(rows[i], j);
        if (v == nullptr) continue;
        live.push_back(i);
        if (IsUnit(*v) && rows[i].size() < best_len) {
          best = i;
          best_len = rows[i].size();
        }
      }
      cr = live;
      if (best_len == std::numeric_limits<std::size_t>::max()) {
        deferred.push_back(j);
        continue;
      }
      pivot(best, j);
      progress = true;
    }
    // Columns without a unit may have gained one through later pivots.
    for (std::uint32_t j : deferred) {
      if (col_alive[j]) heap.emplace(col_count[j], j);
    }
    deferred.clear();
  }

  std::vector<std::uint32_t> res_cols;
  std::vector<std::uint32_t> col_pos(ncols, 0);
  for (std::uint32_t j = 0; j < ncols; ++j) {
    if (col_alive[j] && col_count[j] > 0) {
      col_pos[j] = static_cast<std::uint32_t>(res_cols.size());
      res_cols.push_back(j);
    }
  }
  if (res_cols.empty()) return out;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (!row_alive[i] || rows[i].empty()) continue;
    std::vector<Integer> dense(res_cols.size());
    bool any = false;
    for (const auto& e : rows[i]) {
      if (!col_alive[e.col]) continue;
      dense[col_pos[e.col]] = ToInteger(e.value);
      any = true;
    }
    if (any) out.residual.push_back(std::move(dense));
  }
  return out;
}

// Dense Smith normal form; returns the non-zero invariant factors.
std::vector<Integer> DenseSnf(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> factors;
  const std::size_t m = a.size();
  if (m == 0) return factors;
  const std::size_t n = a[0].size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest non-zero entry of the trailing block goes to (t, t).
    auto bring_min = [&]() {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(a[i][j]) != 0 && (bi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      return true;
    };
    if (!bring_min()) break;
    while (true) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        bring_min();
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(abs(a[t][t]));
  }
  return factors;
}

// Fraction-free Gaussian elimination.
std::size_t DenseRank(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  if (m == 0) return 0;
  const std::size_t n = a[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

struct Factors {
  std::size_t unit_count = 0;       // leading 1s
  std::vector<Integer> rest;        // remaining factors, ascending divisibility
  std::size_t rank() const { return unit_count + rest.size(); }
};

template <class T>
Factors ReduceAndFinish(SparseRows<T> rows, std::size_t ncols, bool rank_only) {
  Reduction red = EliminateUnitPivots<T>(std::move(rows), ncols);
  Factors f;
  f.unit_count = red.unit_pivots;
  if (rank_only) {
    f.unit_count += DenseRank(std::move(red.residual));
    return f;
  }
  for (Integer& d : DenseSnf(std::move(red.residual))) {
    if (d == 1) {
      ++f.unit_count;
    } else {
      f.rest.push_back(std::move(d));
    }
  }
  return f;
}

// Machine integers first; restart on GMP if anything overflows.
Factors Factorize(const SparseRows<std::int64_t>& small, std::size_t ncols, bool rank_only) {
  try {
    return ReduceAndFinish<std::int64_t>(small, ncols, rank_only);
  } catch (const OverflowSignal&) {
    SparseRows<Integer> big(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (const auto& e : small[i]) big[i].push_back({e.col, ToInteger(e.value)});
    }
    return ReduceAndFinish<Integer>(std::move(big), ncols, rank_only);
  }
}

Factors FactorizeMatrix(const IntegerMatrix& m, bool rank_only) {
  bool fits = true;
  for (std::size_t c = 0; c < m.cols() && fits; ++c) {
    for (const auto& e : m.column(c)) {
      if (!e.value.fits_slong_p()) {
        fits = false;
        break;
      }
    }
  }
  if (fits) {
    SparseRows<std::int64_t> rows(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) rows[e.row].push_back({static_cast<std::uint32_t>(c), e.value.get_si()});
    }
    return Factorize(rows, m.cols(), rank_only);
  }
  SparseRows<Integer> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) rows[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return ReduceAndFinish<Integer>(std::move(rows), m.cols(), rank_only);
}

// Boundary d-simplices -> (d-1)-simplices, stored by rows (faces).
SparseRows<std::int64_t> BoundaryRows(const SimplicialComplex& c, int d) {
  SparseRows<std::int64_t> rows(c.count(d - 1));
  std::vector<VertexId> face(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < c.count(d); ++j) {
    auto s = c.simplex(d, j);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) face[w++] = s[i];
      }
      const std::size_t row = *c.Find(face);
      rows[row].push_back({static_cast<std::uint32_t>(j), skip % 2 == 0 ? 1 : -1});
    }
  }
  return rows;
}

std::string FormatGroup(const DimHomology& h) {
  std::string out;
  if (h.betti > 0) out = "Z^" + std::to_string(h.betti);
  for (const Integer& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

IntegerMatrix IntegerMatrix::FromDense(const std::vector<std::vector<long>>& dense) {
  IntegerMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != m.cols_) throw Error(ErrorKind::kLengthMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (dense[r][c] != 0) m.columns_[c].push_back({r, Integer(dense[r][c])});
    }
  }
  return m;
}

Integer IntegerMatrix::At(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.row < x; });
  return it != col.end() && it->row == r ? it->value : Integer(0);
}

void IntegerMatrix::Set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::kIndexOutOfRange, "matrix index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.row < x; });
  const bool present = it != col.end() && it->row == r;
  if (sgn(v) == 0) {
    if (present) col.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    col.insert(it, {r, v});
  }
}

std::vector<std::vector<Integer>> IntegerMatrix::ToDense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& e : columns_[c]) out[e.row][c] = e.value;
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::kLengthMismatch, "matrix product shape mismatch");
  IntegerMatrix out(rows_, o.cols_);
  std::vector<Integer> acc(rows_);
  for (std::size_t c = 0; c < o.cols_; ++c) {
    std::fill(acc.begin(), acc.end(), Integer(0));
    for (const auto& e : o.columns_[c]) {
      for (const auto& f : columns_[e.row]) acc[f.row] += f.value * e.value;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(acc[r]) != 0) out.columns_[c].push_back({r, acc[r]});
    }
  }
  return out;
}

bool IntegerMatrix::IsZero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& col) { return col.empty(); });
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d) {
  if (d < 0 || d > c.dimension() + 1) {
    throw Error(ErrorKind::kDimOutOfRange, "boundary dimension " + std::to_string(d) + " outside [0, " +
                                               std::to_string(c.dimension() + 1) + "]");
  }
  IntegerMatrix m(d == 0 ? 0 : c.count(d - 1), c.count(d));
  if (d == 0) return m;
  SparseRows<std::int64_t> rows = BoundaryRows(c, d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) m.Set(r, e.col, Integer(static_cast<long>(e.value)));
  }
  return m;
}

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
  Factors f = FactorizeMatrix(m, false);
  std::vector<Integer> out(f.unit_count, Integer(1));
  out.insert(out.end(), f.rest.begin(), f.rest.end());
  return out;
}

std::size_t matrix_rank(const IntegerMatrix& m) { return FactorizeMatrix(m, true).rank(); }

std::uint64_t HomologySummary::betti(int d) const {
  for (const DimHomology& h : dims) {
    if (h.dim == d) return h.betti;
  }
  return 0;
}

std::vector<Integer> HomologySummary::torsion(int d) const {
  for (const DimHomology& h : dims) {
    if (h.dim == d) return h.torsion;
  }
  return {};
}

bool HomologySummary::trivial() const {
  return std::all_of(dims.begin(), dims.end(), [](const DimHomology& h) { return h.trivial(); });
}

std::int64_t HomologySummary::euler() const {
  std::int64_t chi = 0;
  for (const DimHomology& h : dims) {
    const auto b = static_cast<std::int64_t>(h.betti);
    chi += (h.dim % 2 == 0) ? b : -b;
  }
  return chi;
}

std::vector<std::string> HomologySummary::Lines() const {
  std::vector<std::string> out;
  for (const DimHomology& h : dims) {
    out.push_back(std::string(reduced ? "H~_" : "H_") + std::to_string(h.dim) + " = " + FormatGroup(h));
  }
  return out;
}

std::string HomologySummary::ToText() const {
  std::string out;
  for (const std::string& line : Lines()) out += line + "\n";
  return out;
}

HomologySummary homology_groups(const SimplicialComplex& c, bool reduced, Coefficients coeffs, Exec exec) {
  HomologySummary summary;
  summary.reduced = reduced;
  const int top = c.dimension();
  if (top < 0) {
    // Empty complex: reduced homology is Z in degree -1.
    if (reduced) summary.dims.push_back({-1, 1, {}});
    return summary;
  }
  const bool rank_only = coeffs == Coefficients::kRationals;
  // factors[d] describes the boundary from d-chains, d = 1..top.
  std::vector<Factors> factors(static_cast<std::size_t>(top) + 2);
  std::exception_ptr failure;
  const bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int d = top; d >= 1; --d) {
    try {
      factors[static_cast<std::size_t>(d)] = Factorize(BoundaryRows(c, d), c.count(d), rank_only);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (reduced) factors[0].unit_count = 1;  // augmentation onto Z

  for (int d = 0; d <= top; ++d) {
    const std::size_t n = c.count(d);
    const std::size_t rank_here = factors[static_cast<std::size_t>(d)].rank();
    const std::size_t rank_above = factors[static_cast<std::size_t>(d) + 1].rank();
    DimHomology h;
    h.dim = d;
    h.betti = n - rank_here - rank_above;
    h.torsion = factors[static_cast<std::size_t>(d) + 1].rest;
    summary.dims.push_back(std::move(h));
  }
  return summary;
}

}  // namespace tphi
