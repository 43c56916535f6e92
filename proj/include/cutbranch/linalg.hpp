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

#ifndef CUTBRANCH_LINALG_H_
#define CUTBRANCH_LINALG_H_

#include <initializer_list>
#include <vector>

#include "cutbranch/rational.hpp"

namespace cutbranch {

// Dense vector of exact rationals. Plain value semantics; dimension is the
// entry count.
class RVector {
 public:
  RVector() = default;
  explicit RVector(int dim) : e_(dim) {}
  RVector(std::initializer_list<Rational> init) : e_(init) {}
  explicit RVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

  int dim() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }
  Rational& operator[](int i) { return e_[i]; }
  const Rational& operator[](int i) const { return e_[i]; }
  void push_back(Rational r) { e_.push_back(std::move(r)); }

  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const;
  bool operator==(const RVector& o) const { return e_ == o.e_; }
  bool operator!=(const RVector& o) const { return e_ != o.e_; }
  bool operator<(const RVector& o) const;  // lexicographic, for ordered sets

  RVector& operator+=(const RVector& o);
  RVector& operator-=(const RVector& o);
  RVector& operator*=(const Rational& s);
  RVector operator+(const RVector& o) const;
  RVector operator-(const RVector& o) const;
  RVector operator*(const Rational& s) const;
  RVector operator-() const;

 private:
  std::vector<Rational> e_;
};

Rational dot(const RVector& a, const RVector& b);
RVector zeros(int dim);
RVector unit(int dim, int i);
RVector constant(int dim, const Rational& value);

// Dense matrix as a list of equal-length rows.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols);

  int rows() const { return static_cast<int>(r_.size()); }
  int cols() const { return cols_; }
  RVector& row(int i) { return r_[i]; }
  const RVector& row(int i) const { return r_[i]; }
  Rational& at(int i, int j) { return r_[i][j]; }
  const Rational& at(int i, int j) const { return r_[i][j]; }
  void add_row(RVector v);

  static RMatrix identity(int n);

 private:
  std::vector<RVector> r_;
  int cols_ = 0;
};

// Exact classification of a linear system M x = rhs.
struct LinearSolveResult {
  enum class Kind { kUnique, kInconsistent, kUnderdetermined };
  Kind kind = Kind::kInconsistent;
  RVector solution;             // kUnique: the solution; kUnderdetermined: a
                                // particular solution with free vars at 0
  std::vector<int> pivot_cols;  // basis description
  std::vector<int> free_cols;
};

LinearSolveResult solve_linear_system(const RMatrix& m, const RVector& rhs);

int matrix_rank(const RMatrix& m);

// Basis of {x : M x = 0}.
std::vector<RVector> kernel_basis(const RMatrix& m);

// 1 + rank of the difference set; k points are affinely independent iff the
// result equals k. Rejects empty input.
int affine_rank(const std::vector<RVector>& points);

}  // namespace cutbranch

#endif  // CUTBRANCH_LINALG_H_
