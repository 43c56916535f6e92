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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "cutbranch/lp.hpp"

using namespace cutbranch;

namespace {

// Independent oracle: enumerate all n-subsets of tight rows, solve the square
// systems directly, keep feasible intersection points. No simplex involved.
std::vector<RVector> oracle_vertices(const std::vector<LinearConstraint>& rows,
                                     int n) {
  auto ge = normalize_to_ge(rows);
  std::vector<RVector> verts;
  int m = static_cast<int>(ge.size());
  std::vector<int> comb(n);
  if (m < n) return verts;
  for (int i = 0; i < n; ++i) comb[i] = i;
  while (true) {
    RMatrix mat(0, n);
    RVector rhs;
    for (int i : comb) {
      mat.add_row(ge[i].coeffs);
      rhs.push_back(ge[i].rhs);
    }
    auto sol = solve_linear_system(mat, rhs);
    if (sol.kind == LinearSolveResult::Kind::kUnique) {
      bool ok = true;
      for (const auto& row : ge)
        if (dot(row.coeffs, sol.solution) < row.rhs) {
          ok = false;
          break;
        }
      if (ok) {
        bool dup = false;
        for (const auto& v : verts)
          if (v == sol.solution) dup = true;
        if (!dup) verts.push_back(sol.solution);
      }
    }
    int i = n - 1;
    while (i >= 0 && comb[i] == m - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  return verts;
}

std::vector<LinearConstraint> box_rows(int n) {
  std::vector<LinearConstraint> rows;
  for (int i = 0; i < n; ++i) {
    rows.push_back(make_ge(unit(n, i), 0));
    rows.push_back(make_le(unit(n, i), 1));
  }
  return rows;
}

}  // namespace

TEST_CASE("simplex corner") {
  LPProblem lp;
  lp.num_vars = 2;
  lp.constraints = {make_le(RVector{1, 1}, 1), make_ge(RVector{1, 0}, 0),
                    make_ge(RVector{0, 1}, 0)};
  lp.objective = RVector{1, 0};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kOptimal);
  CHECK(*out.value == Rational(1));
  CHECK(dot(lp.objective, *out.point) == Rational(1));
}

TEST_CASE("contradictory bounds give a Farkas certificate") {
  LPProblem lp;
  lp.num_vars = 1;
  lp.constraints = {make_ge(RVector{1}, 2), make_le(RVector{1}, 1)};
  lp.objective = RVector{1};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kInfeasible);
  REQUIRE(out.certificate.has_value());
  CHECK(verify_farkas(normalize_to_ge(lp.constraints), *out.certificate));
}

TEST_CASE("fractional stable-set optimum matches the vertex oracle") {
  // max x1+x2+x3 over {x in [0,1]^3 : x_u + x_v <= 1 for all pairs}.
  std::vector<LinearConstraint> rows = box_rows(3);
  rows.push_back(make_le(RVector{1, 1, 0}, 1));
  rows.push_back(make_le(RVector{1, 0, 1}, 1));
  rows.push_back(make_le(RVector{0, 1, 1}, 1));

  LPProblem lp;
  lp.num_vars = 3;
  lp.constraints = rows;
  lp.objective = RVector{1, 1, 1};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kOptimal);
  CHECK(*out.value == Rational(3, 2));
  CHECK(*out.point == RVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)});

  auto verts = oracle_vertices(rows, 3);
  REQUIRE(!verts.empty());
  Rational best = dot(lp.objective, verts[0]);
  for (const auto& v : verts) {
    Rational val = dot(lp.objective, v);
    if (val > best) best = val;
  }
  CHECK(best == *out.value);
}

TEST_CASE("unbounded above reports a feasible point and improving ray") {
  LPProblem lp;
  lp.num_vars = 2;
  lp.constraints = {make_ge(RVector{1, 0}, 0), make_ge(RVector{0, 1}, 3)};
  lp.objective = RVector{1, 1};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kUnbounded);
  REQUIRE(out.point.has_value());
  REQUIRE(out.ray.has_value());
  for (const auto& row : normalize_to_ge(lp.constraints)) {
    CHECK(dot(row.coeffs, *out.point) >= row.rhs);
    CHECK(dot(row.coeffs, *out.ray) >= Rational(0));
  }
  CHECK(dot(lp.objective, *out.ray) > Rational(0));
}

TEST_CASE("minimization flips value, not the point") {
  LPProblem lp;
  lp.num_vars = 1;
  lp.constraints = {make_ge(RVector{1}, Rational(1, 3)), make_le(RVector{1}, 2)};
  lp.objective = RVector{1};
  lp.direction = Direction::kMin;
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kOptimal);
  CHECK(*out.value == Rational(1, 3));
  CHECK((*out.point)[0] == Rational(1, 3));
}

TEST_CASE("equality rows are honored exactly") {
  LPProblem lp;
  lp.num_vars = 2;
  lp.constraints = {make_eq(RVector{1, 1}, Rational(1, 2)),
                    make_ge(RVector{1, 0}, 0), make_ge(RVector{0, 1}, 0)};
  lp.objective = RVector{1, 0};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kOptimal);
  CHECK(*out.value == Rational(1, 2));
}

TEST_CASE("feasible point examples") {
  // {x1 = 1/2} in dim 1
  auto r1 = lp_feasible_point({make_eq(RVector{1}, Rational(1, 2))}, 1);
  REQUIRE(r1.feasible());
  CHECK((*r1.point)[0] == Rational(1, 2));

  // {x1 >= 1, x1 <= 0} -> absent with Farkas certificate
  std::vector<LinearConstraint> bad = {make_ge(RVector{1}, 1),
                                       make_le(RVector{1}, 0)};
  auto r2 = lp_feasible_point(bad, 1);
  CHECK(!r2.feasible());
  REQUIRE(r2.farkas.has_value());
  CHECK(verify_farkas(normalize_to_ge(bad), *r2.farkas));
}

TEST_CASE("skewed-tree leaf atom of the small knapsack is empty") {
  // q=3, n=4: sum 3 x_j <= 4 with x_1 = x_2 = 1 forced; capacity 4/3 < 2.
  std::vector<LinearConstraint> rows = box_rows(4);
  rows.push_back(make_le(RVector{3, 3, 3, 3}, 4));
  rows.push_back(make_eq(unit(4, 0), 1));
  rows.push_back(make_eq(unit(4, 1), 1));
  auto r = lp_feasible_point(rows, 4);
  CHECK(!r.feasible());
  REQUIRE(r.farkas.has_value());
  CHECK(verify_farkas(normalize_to_ge(rows), *r.farkas));
}

TEST_CASE("optimal points are basic and stable under objective negation") {
  std::mt19937_64 rng(20260401);
  int checked = 0;
  for (int it = 0; it < 120; ++it) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<LinearConstraint> rows = box_rows(n);
    int extra = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < extra; ++e) {
      RVector a(n);
      for (int i = 0; i < n; ++i)
        a[i] = Rational(static_cast<long>(rng() % 7) - 3);
      // keep (1/2)1 feasible
      Rational rhs = dot(a, constant(n, Rational(1, 2)));
      rows.push_back(make_ge(a, rhs - Rational(static_cast<long>(rng() % 3))));
    }
    RVector c(n);
    for (int i = 0; i < n; ++i)
      c[i] = Rational(static_cast<long>(rng() % 11) - 5);
    LPProblem lp{n, rows, c, Direction::kMax};
    auto out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::kOptimal);
    CHECK(is_basic_solution(normalize_to_ge(rows), *out.point));

    LPProblem neg{n, rows, -c, Direction::kMin};
    auto out2 = lp_solve(neg);
    REQUIRE(out2.status == LPStatus::kOptimal);
    CHECK(*out2.value == -*out.value);
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("randomized termination and classification smoke test") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 5);
    std::vector<LinearConstraint> rows;
    for (int r = 0; r < m; ++r) {
      RVector a(n);
      for (int i = 0; i < n; ++i)
        a[i] = Rational(static_cast<long>(rng() % 7) - 3);
      Rational rhs(static_cast<long>(rng() % 9) - 4);
      int s = static_cast<int>(rng() % 3);
      Sense sense = s == 0 ? Sense::kGe : (s == 1 ? Sense::kLe : Sense::kEq);
      rows.push_back(LinearConstraint{a, rhs, sense});
    }
    RVector c(n);
    for (int i = 0; i < n; ++i)
      c[i] = Rational(static_cast<long>(rng() % 7) - 3);
    LPProblem lp{n, rows, c, rng() % 2 ? Direction::kMax : Direction::kMin};
    auto out = lp_solve(lp);  // must terminate and self-verify
    if (out.status == LPStatus::kInfeasible)
      CHECK(verify_farkas(normalize_to_ge(rows), *out.certificate));
  }
}
