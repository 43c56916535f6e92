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

#include "cutbranch/constraint.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace cutbranch {

std::string sense_str(Sense s) {
  switch (s) {
    case Sense::kGe: return ">=";
    case Sense::kLe: return "<=";
    case Sense::kEq: return "=";
  }
  return "?";
}

Sense sense_from_str(const std::string& s) {
  if (s == ">=") return Sense::kGe;
  if (s == "<=") return Sense::kLe;
  if (s == "=" || s == "==") return Sense::kEq;
  throw std::invalid_argument("unknown sense: " + s);
}

bool LinearConstraint::satisfied_by(const RVector& x) const {
  Rational lhs = dot(coeffs, x);
  switch (sense) {
    case Sense::kGe: return lhs >= rhs;
    case Sense::kLe: return lhs <= rhs;
    case Sense::kEq: return lhs == rhs;
  }
  return false;
}

LinearConstraint make_ge(RVector coeffs, Rational rhs) {
  return LinearConstraint{std::move(coeffs), std::move(rhs), Sense::kGe};
}

LinearConstraint make_le(RVector coeffs, Rational rhs) {
  return LinearConstraint{std::move(coeffs), std::move(rhs), Sense::kLe};
}

LinearConstraint make_eq(RVector coeffs, Rational rhs) {
  return LinearConstraint{std::move(coeffs), std::move(rhs), Sense::kEq};
}

std::vector<LinearConstraint> normalize_to_ge(
    const std::vector<LinearConstraint>& rows) {
  std::vector<LinearConstraint> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    switch (row.sense) {
      case Sense::kGe:
        out.push_back(row);
        break;
      case Sense::kLe:
        out.push_back(make_ge(-row.coeffs, -row.rhs));
        break;
      case Sense::kEq:
        out.push_back(make_ge(row.coeffs, row.rhs));
        out.push_back(make_ge(-row.coeffs, -row.rhs));
        break;
    }
  }
  return out;
}

LinearConstraint canonical_ge_row(const LinearConstraint& row) {
  for (int i = 0; i < row.coeffs.dim(); ++i) {
    if (!row.coeffs[i].is_zero()) {
      Rational s = Rational(1) / row.coeffs[i].abs();
      LinearConstraint c = row;
      c.coeffs *= s;
      c.rhs *= s;
      return c;
    }
  }
  return row;
}

std::vector<LinearConstraint> dedupe_ge_rows(
    const std::vector<LinearConstraint>& rows, std::vector<int>* out_rep,
    std::vector<Rational>* out_scale) {
  std::vector<LinearConstraint> kept;
  if (out_rep) out_rep->clear();
  if (out_scale) out_scale->clear();
  std::map<std::pair<std::vector<Rational>, Rational>, int> seen;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    LinearConstraint c = canonical_ge_row(rows[i]);
    std::vector<Rational> key(c.coeffs.begin(), c.coeffs.end());
    auto [it, inserted] = seen.try_emplace({std::move(key), c.rhs},
                                           static_cast<int>(kept.size()));
    if (!inserted) continue;
    // Scale of the original row relative to the canonical one.
    Rational scale = 1;
    for (int j = 0; j < rows[i].coeffs.dim(); ++j) {
      if (!rows[i].coeffs[j].is_zero()) {
        scale = rows[i].coeffs[j].abs();
        break;
      }
    }
    kept.push_back(std::move(c));
    if (out_rep) out_rep->push_back(i);
    if (out_scale) out_scale->push_back(scale);
  }
  return kept;
}

}  // namespace cutbranch
