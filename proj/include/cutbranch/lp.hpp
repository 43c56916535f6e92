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

#ifndef CUTBRANCH_LP_H_
#define CUTBRANCH_LP_H_

#include <optional>
#include <vector>

#include "cutbranch/constraint.hpp"

namespace cutbranch {

enum class Direction { kMax, kMin };

struct LPProblem {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  RVector objective;
  Direction direction = Direction::kMax;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

// Every outcome is re-verified in exact arithmetic before being returned:
// optimal points satisfy all constraints and match the claimed value, Farkas
// certificates recombine to an exact contradiction, rays exactly improve.
struct LPOutcome {
  LPStatus status = LPStatus::kInfeasible;
  // optimal: the optimizer (a basic solution); unbounded: a feasible point.
  std::optional<RVector> point;
  std::optional<Rational> value;  // optimal only
  // Multipliers indexed against normalize_to_ge(problem.constraints):
  // infeasible -> Farkas witness (nonnegative combination yielding
  // 0 . x >= positive); optimal -> optimal dual multipliers.
  std::optional<RVector> certificate;
  // unbounded: direction along which the objective improves without bound.
  std::optional<RVector> ray;
};

LPOutcome lp_solve(const LPProblem& problem);

struct FeasibilityResult {
  std::optional<RVector> point;
  std::optional<RVector> farkas;  // over normalize_to_ge(rows) when absent
  bool feasible() const { return point.has_value(); }
};

FeasibilityResult lp_feasible_point(const std::vector<LinearConstraint>& rows,
                                    int num_vars);

// mult is a Farkas witness for the >= system: mult >= 0, sum of
// mult_i * row_i has all-zero coefficients and positive rhs.
bool verify_farkas(const std::vector<LinearConstraint>& ge_rows,
                   const RVector& mult);

// x is basic for the >= system when the rows tight at x have full rank.
bool is_basic_solution(const std::vector<LinearConstraint>& ge_rows,
                       const RVector& x);

}  // namespace cutbranch

#endif  // CUTBRANCH_LP_H_
