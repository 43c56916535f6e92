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

#ifndef CUTBRANCH_POLYTOPE_H_
#define CUTBRANCH_POLYTOPE_H_

#include <optional>
#include <vector>

#include "cutbranch/budget.hpp"
#include "cutbranch/lp.hpp"

namespace cutbranch {

// Constraint system over n original variables plus aux auxiliary (lifted)
// variables. The implicit-box flag asserts 0 <= x_i <= 1 for the original
// variables without storing those rows. The represented set is the shadow in
// the original variables: x belongs iff some aux assignment satisfies every
// row. Values are immutable after construction.
class Polytope {
 public:
  Polytope() = default;
  Polytope(int n, int aux, std::vector<LinearConstraint> rows,
           bool implicit_box);

  static Polytope box(int n);    // [0,1]^n
  static Polytope empty(int n);  // canonical infeasible system 0 >= 1

  int original_dim() const { return n_; }
  int aux_dim() const { return aux_; }
  int dim() const { return n_ + aux_; }
  bool implicit_box() const { return box_; }
  const std::vector<LinearConstraint>& rows() const { return rows_; }

  // rows() plus the box rows for original variables when the flag is set.
  std::vector<LinearConstraint> materialized_rows() const;

  Polytope with_rows(std::vector<LinearConstraint> extra) const;
  // The face {x : x_var = bit} (var indexes an original variable).
  Polytope face(int var, int bit) const;

  bool operator==(const Polytope& o) const;

 private:
  int n_ = 0;
  int aux_ = 0;
  bool box_ = false;
  std::vector<LinearConstraint> rows_;
};

struct VPointSet {
  std::vector<RVector> points;
  int size() const { return static_cast<int>(points.size()); }
  bool empty() const { return points.empty(); }
};

// conv(P intersected with {0,1}^n): all feasible 0/1 points (each is a vertex
// of the hull), plus an exact facet description when synthesized.
struct IntegerHull {
  VPointSet vertices;
  std::optional<std::vector<LinearConstraint>> facets;
};

// Membership of x (original coordinates) decided by exact LP over the aux
// variables; direct row evaluation when there are none.
bool is_member(const Polytope& p, const RVector& x);

bool is_empty(const Polytope& p);
std::optional<RVector> feasible_point(const Polytope& p);

// min/max of an objective over the original variables; the outcome's point is
// truncated to the original coordinates.
LPOutcome optimize(const Polytope& p, const RVector& objective, Direction dir);

// Exactly the extreme points, by enumeration of feasible bases of tight rows.
// Requires an explicit H-representation (aux_dim 0). An empty polytope yields
// an empty set.
VPointSet vertices(const Polytope& p, const Budgets& budgets = {});

// Fourier-Motzkin elimination of everything outside `keep` (ascending list of
// original variable indices), with interleaved duplicate and LP-based
// redundancy removal. The result is an explicit H-rep over the kept variables.
Polytope project(const Polytope& p, const std::vector<int>& keep,
                 const Budgets& budgets = {});

// Balas extended formulation of conv(union of parts). Parts must share the
// original dimension; each part contributes a scaled copy of its materialized
// system plus a convex multiplier. Empty parts are forced to zero weight by
// the formulation itself.
Polytope balas_union(const std::vector<Polytope>& parts);

IntegerHull integer_hull(const Polytope& p, const Budgets& budgets = {},
                         bool with_facets = true);

// Exact H-rep of conv(points): affine-hull equalities plus every facet,
// synthesized from affinely independent point subsets. `dim` disambiguates
// the empty case.
std::vector<LinearConstraint> hull_facets(const VPointSet& points, int dim,
                                          const Budgets& budgets = {});

// H contained in R: every hull vertex is a member of R.
bool contains(const Polytope& r, const IntegerHull& h);

struct HullComparison {
  enum class Kind { kEqual, kWitness, kHullVertexOutside };
  Kind kind = Kind::kEqual;
  RVector witness;  // kWitness: point of R violating a hull facet;
                    // kHullVertexOutside: the missing hull vertex
  bool equal() const { return kind == Kind::kEqual; }
};

// equal iff every hull vertex lies in R and every hull facet is valid for R
// (by exact minimization); otherwise reports a separating witness.
HullComparison equals_integer_hull(const Polytope& r, const IntegerHull& h);

// Lemma-style witness: given n affinely independent points on {a.x = b} and a
// set R of points strictly beyond it, returns a point of
// every conv(facet_points + {r}) with a.x > b, by one LP maximizing a.x over
// shared x and per-r convex multipliers.
RVector dash_witness(const VPointSet& facet_points, const VPointSet& beyond,
                     const RVector& a, const Rational& b);

// Drops rows implied by the rest (checked by exact LP). Returns the canonical
// empty system when the input is infeasible.
std::vector<LinearConstraint> remove_redundant_rows(
    std::vector<LinearConstraint> rows, int dim, const Budgets& budgets = {});

// Conjunction of lifted systems over a common original space; aux blocks are
// concatenated.
Polytope intersect_lifted(const std::vector<Polytope>& parts);

// conv(union of parts) through vertex enumeration and facet synthesis
// (explicit route; small dimensions).
Polytope explicit_union_hull(const std::vector<Polytope>& parts,
                             const Budgets& budgets = {});

}  // namespace cutbranch

#endif  // CUTBRANCH_POLYTOPE_H_
