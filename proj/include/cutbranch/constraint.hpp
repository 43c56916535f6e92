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

#ifndef CUTBRANCH_CONSTRAINT_H_
#define CUTBRANCH_CONSTRAINT_H_

#include <string>
#include <vector>

#include "cutbranch/linalg.hpp"

namespace cutbranch {

enum class Sense { kGe, kLe, kEq };

std::string sense_str(Sense s);
Sense sense_from_str(const std::string& s);

// One linear row: coeffs . x  (sense)  rhs.
struct LinearConstraint {
  RVector coeffs;
  Rational rhs;
  Sense sense = Sense::kGe;

  bool satisfied_by(const RVector& x) const;
  bool operator==(const LinearConstraint& o) const {
    return sense == o.sense && rhs == o.rhs && coeffs == o.coeffs;
  }
};

LinearConstraint make_ge(RVector coeffs, Rational rhs);
LinearConstraint make_le(RVector coeffs, Rational rhs);
LinearConstraint make_eq(RVector coeffs, Rational rhs);

// Expands every row into >= form, in input order: a >= row stays, a <= row is
// negated, an equality becomes the pair (>= rhs, negated >= -rhs).
std::vector<LinearConstraint> normalize_to_ge(
    const std::vector<LinearConstraint>& rows);

// Scales a >= row so its first nonzero coefficient has absolute value one
// (all-zero rows are returned unchanged). Used for exact duplicate detection.
LinearConstraint canonical_ge_row(const LinearConstraint& row);

// Removes exact duplicates (after canonical scaling) from a >= system.
// out_rep[i], when provided, maps each kept row to the index of its first
// occurrence in the input, and out_scale[i] to the factor by which that
// original row was divided.
std::vector<LinearConstraint> dedupe_ge_rows(
    const std::vector<LinearConstraint>& rows,
    std::vector<int>* out_rep = nullptr,
    std::vector<Rational>* out_scale = nullptr);

}  // namespace cutbranch

#endif  // CUTBRANCH_CONSTRAINT_H_
