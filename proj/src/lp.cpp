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

#include "cutbranch/lp.hpp"

#include <stdexcept>

#include "cutbranch/simplex.hpp"

// lp_solve works on max{c.x : Ax >= b, x free} through its dual
// max{b.y : A^T y = -c, y >= 0}: the standard-form basis then has one row per
// structural variable instead of one per constraint, which is what keeps the
// lift-and-project systems (many rows, fewer variables) tractable. The primal
// optimum is read off the row multipliers; a dual improving ray is a Farkas
// certificate of primal infeasibility; when the dual is infeasible, a pure
// feasibility solve (same construction with c = 0) separates unbounded from
// infeasible.

namespace cutbranch {

namespace {

struct DedupedSystem {
  std::vector<LinearConstraint> ge;      // normalized input rows
  std::vector<LinearConstraint> rows;    // deduped, canonically scaled
  std::vector<int> rep;                  // deduped row -> first ge index
  std::vector<Rational> scale;           // ge[rep[j]] = scale[j] * rows[j]
};

DedupedSystem prepare(const std::vector<LinearConstraint>& constraints,
                      int num_vars) {
  for (const auto& row : constraints)
    if (row.coeffs.dim() != num_vars)
      throw std::invalid_argument("lp: constraint dimension mismatch");
  DedupedSystem sys;
  sys.ge = normalize_to_ge(constraints);
  sys.rows = dedupe_ge_rows(sys.ge, &sys.rep, &sys.scale);
  return sys;
}

std::vector<SparseCol> row_columns(const std::vector<LinearConstraint>& rows,
                                   int num_vars) {
  std::vector<SparseCol> cols(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (int i = 0; i < num_vars; ++i)
      if (!rows[j].coeffs[i].is_zero())
        cols[j].entries.emplace_back(i, rows[j].coeffs[i]);
  }
  return cols;
}

RVector row_rhs_vector(const std::vector<LinearConstraint>& rows) {
  RVector b(static_cast<int>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) b[j] = rows[j].rhs;
  return b;
}

// Expands multipliers over the deduped rows back to the normalized system.
RVector expand_multipliers(const DedupedSystem& sys, const RVector& mult) {
  RVector out(static_cast<int>(sys.ge.size()));
  for (int j = 0; j < mult.dim(); ++j) {
    if (mult[j].is_zero()) continue;
    out[sys.rep[j]] = mult[j] / sys.scale[j];
  }
  return out;
}

bool point_satisfies(const std::vector<LinearConstraint>& ge_rows,
                     const RVector& x) {
  for (const auto& row : ge_rows)
    if (dot(row.coeffs, x) < row.rhs) return false;
  return true;
}

}  // namespace

bool verify_farkas(const std::vector<LinearConstraint>& ge_rows,
                   const RVector& mult) {
  if (mult.dim() != static_cast<int>(ge_rows.size())) return false;
  if (ge_rows.empty()) return false;
  int n = ge_rows[0].coeffs.dim();
  RVector combo(n);
  Rational rhs;
  for (int j = 0; j < mult.dim(); ++j) {
    if (mult[j] < Rational(0)) return false;
    if (mult[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) combo[i] += mult[j] * ge_rows[j].coeffs[i];
    rhs += mult[j] * ge_rows[j].rhs;
  }
  return combo.is_zero() && rhs > Rational(0);
}

bool is_basic_solution(const std::vector<LinearConstraint>& ge_rows,
                       const RVector& x) {
  RMatrix tight(0, x.dim());
  for (const auto& row : ge_rows)
    if (dot(row.coeffs, x) == row.rhs) tight.add_row(row.coeffs);
  return tight.rows() > 0 && matrix_rank(tight) == x.dim();
}

LPOutcome lp_solve(const LPProblem& problem) {
  if (problem.objective.dim() != problem.num_vars)
    throw std::invalid_argument("lp: objective dimension mismatch");
  DedupedSystem sys = prepare(problem.constraints, problem.num_vars);
  int n = problem.num_vars;
  bool maximize = problem.direction == Direction::kMax;
  RVector c = maximize ? problem.objective : -problem.objective;

  auto cols = row_columns(sys.rows, n);
  RVector b = row_rhs_vector(sys.rows);

  auto dual = StandardFormSimplex::solve(n, cols, -c, b);
  LPOutcome out;
  if (dual.status == StandardFormSimplex::Status::kOptimal) {
    RVector x = dual.row_multipliers;
    if (!point_satisfies(sys.ge, x))
      throw std::logic_error("lp: recovered point infeasible");
    Rational value = dot(c, x);
    if (value != -dual.value) throw std::logic_error("lp: strong duality gap");
    out.status = LPStatus::kOptimal;
    out.point = std::move(x);
    out.value = maximize ? value : -value;
    out.certificate = expand_multipliers(sys, dual.solution);
    return out;
  }
  if (dual.status == StandardFormSimplex::Status::kUnbounded) {
    RVector farkas = expand_multipliers(sys, dual.ray);
    if (!verify_farkas(sys.ge, farkas))
      throw std::logic_error("lp: bad Farkas certificate");
    out.status = LPStatus::kInfeasible;
    out.certificate = std::move(farkas);
    return out;
  }

  // Dual infeasible: the primal is unbounded or infeasible. The phase-1
  // multipliers already give an improving ray candidate for the primal.
  RVector improving = dual.row_multipliers;
  auto feas = StandardFormSimplex::solve(n, cols, RVector(n), b);
  if (feas.status == StandardFormSimplex::Status::kUnbounded) {
    RVector farkas = expand_multipliers(sys, feas.ray);
    if (!verify_farkas(sys.ge, farkas))
      throw std::logic_error("lp: bad Farkas certificate");
    out.status = LPStatus::kInfeasible;
    out.certificate = std::move(farkas);
    return out;
  }
  if (feas.status != StandardFormSimplex::Status::kOptimal)
    throw std::logic_error("lp: feasibility system cannot be infeasible");
  RVector x = feas.row_multipliers;
  if (!point_satisfies(sys.ge, x))
    throw std::logic_error("lp: recovered feasible point invalid");
  for (const auto& row : sys.ge)
    if (dot(row.coeffs, improving) < Rational(0))
      throw std::logic_error("lp: improving ray leaves feasible cone");
  if (dot(c, improving) <= Rational(0))
    throw std::logic_error("lp: ray does not improve");
  out.status = LPStatus::kUnbounded;
  out.point = std::move(x);
  out.ray = std::move(improving);
  return out;
}

FeasibilityResult lp_feasible_point(const std::vector<LinearConstraint>& rows,
                                    int num_vars) {
  DedupedSystem sys = prepare(rows, num_vars);
  auto cols = row_columns(sys.rows, num_vars);
  RVector b = row_rhs_vector(sys.rows);
  auto feas = StandardFormSimplex::solve(num_vars, cols, RVector(num_vars), b);
  FeasibilityResult res;
  if (feas.status == StandardFormSimplex::Status::kUnbounded) {
    RVector farkas = expand_multipliers(sys, feas.ray);
    if (!verify_farkas(sys.ge, farkas))
      throw std::logic_error("lp: bad Farkas certificate");
    res.farkas = std::move(farkas);
    return res;
  }
  if (feas.status != StandardFormSimplex::Status::kOptimal)
    throw std::logic_error("lp: feasibility system cannot be infeasible");
  RVector x = feas.row_multipliers;
  if (!point_satisfies(sys.ge, x))
    throw std::logic_error("lp: recovered feasible point invalid");
  res.point = std::move(x);
  return res;
}

}  // namespace cutbranch
