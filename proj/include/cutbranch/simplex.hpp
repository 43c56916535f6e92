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

#ifndef CUTBRANCH_SIMPLEX_H_
#define CUTBRANCH_SIMPLEX_H_

#include <utility>
#include <vector>

#include "cutbranch/linalg.hpp"

namespace cutbranch {

// Column of the constraint matrix, entries sorted by row index.
struct SparseCol {
  std::vector<std::pair<int, Rational>> entries;
};

// Exact two-phase revised simplex for
//     max obj.w   s.t.   sum_j w_j col_j = rhs,   w >= 0,
// with Bland's smallest-index rule in both phases, so it terminates on every
// input. Artificial variables that cannot be driven out of the basis mark
// their rows as redundant and stay pinned at zero.
class StandardFormSimplex {
 public:
  enum class Status { kOptimal, kUnbounded, kInfeasible };

  struct Result {
    Status status = Status::kInfeasible;
    Rational value;           // optimal objective value
    RVector solution;         // optimal w
    RVector row_multipliers;  // optimal: z with obj_j - z.col_j <= 0 for all j
                              // and z.rhs = value;
                              // infeasible: z with z.col_j >= 0 for all j and
                              // z.rhs < 0 (Farkas for the equality system)
    RVector ray;              // unbounded: r >= 0 with G r = 0, obj.r > 0
    RVector ray_base;         // unbounded: a feasible w
    long pivots = 0;
  };

  static Result solve(int num_rows, const std::vector<SparseCol>& cols,
                      const RVector& rhs, const RVector& obj);
};

}  // namespace cutbranch

#endif  // CUTBRANCH_SIMPLEX_H_
