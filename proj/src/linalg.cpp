// Copyright 2026 The Cutbranch Authors
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

#include "cutbranch/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cutbranch {

bool RVector::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RVector::operator<(const RVector& o) const {
  int n = std::min(dim(), o.dim());
  for (int i = 0; i < n; ++i) {
    if (e_[i] < o.e_[i]) return true;
    if (o.e_[i] < e_[i]) return false;
  }
  return dim() < o.dim();
}

RVector& RVector::operator+=(const RVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dim mismatch");
  for (int i = 0; i < dim(); ++i) e_[i] += o.e_[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dim mismatch");
  for (int i = 0; i < dim(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RVector& RVector::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

RVector RVector::operator+(const RVector& o) const {
  RVector r(*this);
  r += o;
  return r;
}

RVector RVector::operator-(const RVector& o) const {
  RVector r(*this);
  r -= o;
  return r;
}

RVector RVector::operator*(const Rational& s) const {
  RVector r(*this);
  r *= s;
  return r;
}

RVector RVector::operator-() const {
  RVector r(*this);
  for (auto& x : r) x = -x;
  return r;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dim mismatch");
  Rational s;
  for (int i = 0; i < a.dim(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

RVector zeros(int dim) { return RVector(dim); }

RVector unit(int dim, int i) {
  RVector v(dim);
  v[i] = 1;
  return v;
}

RVector constant(int dim, const Rational& value) {
  RVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = value;
  return v;
}

RMatrix::RMatrix(int rows, int cols) : cols_(cols) {
  r_.assign(rows, RVector(cols));
}

void RMatrix::add_row(RVector v) {
  if (rows() == 0) cols_ = v.dim();
  if (v.dim() != cols_) throw std::invalid_argument("row width mismatch");
  r_.push_back(std::move(v));
}

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// In-place Gauss-Jordan over the given columns; returns pivot (col, row)
// pairs in elimination order.
std::vector<std::pair<int, int>> reduce(std::vector<RVector>& rows, int ncols) {
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i) {
      if (!rows[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    Rational inv = Rational(1) / rows[r][c];
    rows[r] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (int j = 0; j < rows[i].dim(); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.emplace_back(c, r);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolveResult solve_linear_system(const RMatrix& m, const RVector& rhs) {
  if (m.rows() != rhs.dim())
    throw std::invalid_argument("solve_linear_system: rhs dim mismatch");
  int n = m.cols();
  std::vector<RVector> aug;
  aug.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    RVector row = m.row(i);
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  auto pivots = reduce(aug, n);

  LinearSolveResult res;
  for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i) {
    if (!aug[i][n].is_zero()) {
      res.kind = LinearSolveResult::Kind::kInconsistent;
      return res;
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (auto [c, r] : pivots) {
    is_pivot[c] = true;
    res.pivot_cols.push_back(c);
  }
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) res.free_cols.push_back(c);

  RVector x(n);
  for (auto [c, r] : pivots) x[c] = aug[r][n];
  res.solution = std::move(x);
  res.kind = res.free_cols.empty() ? LinearSolveResult::Kind::kUnique
                                   : LinearSolveResult::Kind::kUnderdetermined;
  return res;
}

int matrix_rank(const RMatrix& m) {
  std::vector<RVector> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return static_cast<int>(reduce(rows, m.cols()).size());
}

std::vector<RVector> kernel_basis(const RMatrix& m) {
  int n = m.cols();
  std::vector<RVector> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto pivots = reduce(rows, n);

  std::vector<int> pivot_of_col(n, -1);
  for (auto [c, r] : pivots) pivot_of_col[c] = r;
  std::vector<RVector> basis;
  for (int f = 0; f < n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    RVector v(n);
    v[f] = 1;
    for (auto [c, r] : pivots) v[c] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<RVector>& points) {
  if (points.empty())
    throw std::invalid_argument("affine_rank: empty point set");
  int d = points[0].dim();
  RMatrix diffs(0, d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != d)
      throw std::invalid_argument("affine_rank: dim mismatch");
    diffs.add_row(points[i] - points[0]);
  }
  return 1 + (diffs.rows() == 0 ? 0 : matrix_rank(diffs));
}

}  // namespace cutbranch
