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

#include <algorithm>
#include <random>
#include <set>

#include "cutbranch/polytope.hpp"

using namespace cutbranch;

namespace {

Polytope stable_set_k(int n) {
  std::vector<LinearConstraint> rows;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      RVector a(n);
      a[u] = 1;
      a[v] = 1;
      rows.push_back(make_le(std::move(a), 1));
    }
  return Polytope(n, 0, std::move(rows), true);
}

// Q of the triangle-limit family: m disjoint triangles, sum >= m + 1/2.
Polytope triangle_q(int m) {
  int d = 3 * m;
  std::vector<LinearConstraint> rows;
  for (int t = 0; t < m; ++t)
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) {
        RVector a(d);
        a[3 * t + u] = 1;
        a[3 * t + v] = 1;
        rows.push_back(make_le(std::move(a), 1));
      }
  rows.push_back(make_ge(constant(d, 1), Rational(2 * m * 2 + 2, 4)));
  // rhs = m + 1/2 = (4m + 2)/4
  return Polytope(d, 0, std::move(rows), true);
}

// Independent oracle for vertex sets: brute-force over all square subsystems.
std::set<RVector> oracle_vertices(const Polytope& p) {
  auto ge = normalize_to_ge(p.materialized_rows());
  int n = p.original_dim();
  int m = static_cast<int>(ge.size());
  std::set<RVector> verts;
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  if (m < n) return verts;
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
      if (ok) verts.insert(sol.solution);
    }
    int i = n - 1;
    while (i >= 0 && comb[i] == m - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  return verts;
}

RVector rational_point(std::mt19937_64& rng, int n) {
  RVector x(n);
  for (int i = 0; i < n; ++i)
    x[i] = Rational(static_cast<long>(rng() % 9), 8);
  return x;
}

bool rows_describe_same_set(const Polytope& a, const Polytope& b,
                            std::mt19937_64& rng, int samples = 50) {
  for (int s = 0; s < samples; ++s) {
    RVector x = rational_point(rng, a.original_dim());
    if (is_member(a, x) != is_member(b, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("membership on the unit square and K3") {
  Polytope square = Polytope::box(2);
  CHECK(is_member(square, RVector{Rational(1, 2), Rational(1, 2)}));
  CHECK(!is_member(square, RVector{2, 0}));
  CHECK_THROWS_AS(is_member(square, RVector{1}), std::invalid_argument);

  Polytope k3 = stable_set_k(3);
  CHECK(is_member(k3, constant(3, Rational(1, 2))));
  CHECK(!is_member(k3, RVector{1, 1, 0}));
}

TEST_CASE("vertex enumeration on boxes and simplices") {
  auto sq = vertices(Polytope::box(2));
  CHECK(sq.size() == 4);

  Polytope tri(2, 0, {make_le(RVector{1, 1}, 1)}, true);
  auto tv = vertices(tri);
  REQUIRE(tv.size() == 3);
  std::set<RVector> got(tv.points.begin(), tv.points.end());
  CHECK(got.count(RVector{0, 0}) == 1);
  CHECK(got.count(RVector{1, 0}) == 1);
  CHECK(got.count(RVector{0, 1}) == 1);

  CHECK(vertices(Polytope::empty(2)).empty());
  CHECK_THROWS_AS(vertices(balas_union({tri, tri})), std::invalid_argument);
}

TEST_CASE("triangle-limit Q vertices against the brute-force oracle") {
  // m = 1: the edge rows imply sum <= 3/2, so the sum row forces the single
  // point (1/2, 1/2, 1/2).
  Polytope q1 = triangle_q(1);
  auto vs = vertices(q1);
  REQUIRE(vs.size() == 1);
  CHECK(vs.points[0] == constant(3, Rational(1, 2)));
  auto oracle = oracle_vertices(q1);
  CHECK(std::set<RVector>(vs.points.begin(), vs.points.end()) == oracle);

  // m = 2 (dim 6): mixed half/integral patterns appear.
  Polytope q2 = triangle_q(2);
  RVector mixed{Rational(1, 2), Rational(1, 2), Rational(1, 2), 1, 0, 0};
  CHECK(is_member(q2, mixed));
  auto vs2 = vertices(q2);
  auto oracle2 = oracle_vertices(q2);
  CHECK(std::set<RVector>(vs2.points.begin(), vs2.points.end()) == oracle2);
  CHECK(std::count(vs2.points.begin(), vs2.points.end(), mixed) == 1);
}

TEST_CASE("projection of the triangle onto x1") {
  Polytope tri(2, 0, {make_le(RVector{1, 1}, 1)}, true);
  Polytope p = project(tri, {0});
  CHECK(p.original_dim() == 1);
  CHECK(is_member(p, RVector{Rational(1, 2)}));
  CHECK(is_member(p, RVector{0}));
  CHECK(is_member(p, RVector{1}));
  CHECK(!is_member(p, RVector{Rational(9, 8)}));
  CHECK(!is_member(p, RVector{Rational(-1, 8)}));
}

TEST_CASE("balas union of two points projects to the diagonal segment") {
  Polytope p0(2, 0, {make_eq(unit(2, 0), 0), make_eq(unit(2, 1), 0)}, true);
  Polytope p1(2, 0, {make_eq(unit(2, 0), 1), make_eq(unit(2, 1), 1)}, true);
  Polytope u = balas_union({p0, p1});
  CHECK(is_member(u, constant(2, Rational(1, 2))));
  CHECK(!is_member(u, RVector{1, 0}));

  Polytope shadow = project(u, {0, 1});
  // segment x1 = x2, 0 <= x1 <= 1
  CHECK(is_member(shadow, constant(2, Rational(1, 4))));
  CHECK(!is_member(shadow, RVector{Rational(1, 4), Rational(1, 2)}));
  CHECK(is_member(shadow, RVector{0, 0}));
  CHECK(is_member(shadow, RVector{1, 1}));
}

TEST_CASE("balas union: an empty part is forced to zero weight") {
  Polytope p0(1, 0, {make_eq(unit(1, 0), 0)}, true);
  Polytope p1(1, 0, {make_eq(unit(1, 0), 1)}, true);
  Polytope bad(1, 0, {make_ge(unit(1, 0), 2)}, true);  // empty inside the box
  Polytope u = balas_union({p0, p1, bad});

  // The multiplier of the empty part sits at offset for part 2 plus its dim.
  int lambda_bad = 1 + (1 + 1) + (1 + 1) + 1;  // x | block0 | block1 | chi2
  LPProblem lp;
  lp.num_vars = u.dim();
  lp.constraints = u.materialized_rows();
  lp.objective = RVector(u.dim());
  lp.objective[lambda_bad] = 1;
  auto out = lp_solve(lp);
  REQUIRE(out.status == LPStatus::kOptimal);
  CHECK(*out.value == Rational(0));

  // The union still equals conv of the two surviving points.
  CHECK(is_member(u, constant(1, Rational(1, 2))));
  CHECK(is_member(u, RVector{0}));
  CHECK(is_member(u, RVector{1}));
  std::mt19937_64 rng(5);
  Polytope seg = explicit_union_hull({p0, p1});
  CHECK(rows_describe_same_set(u, seg, rng));
}

TEST_CASE("integer hull of the fractional stable set of K3") {
  auto hull = integer_hull(stable_set_k(3));
  CHECK(hull.vertices.size() == 4);  // 0 and the three unit vectors
  REQUIRE(hull.facets.has_value());
  // Expect exactly x_i >= 0 and sum <= 1 as facets.
  std::set<std::pair<std::vector<Rational>, Rational>> keys;
  for (const auto& f : *hull.facets) {
    REQUIRE(f.sense == Sense::kGe);
    keys.insert({{f.coeffs.begin(), f.coeffs.end()}, f.rhs});
  }
  CHECK(keys.size() == 4);
  CHECK(keys.count({{1, 0, 0}, 0}) == 1);
  CHECK(keys.count({{0, 1, 0}, 0}) == 1);
  CHECK(keys.count({{0, 0, 1}, 0}) == 1);
  CHECK(keys.count({{-1, -1, -1}, -1}) == 1);  // sum <= 1, canonical form
}

TEST_CASE("integer hull of Q faces is empty; no-good hull has the 7 facets") {
  CHECK(integer_hull(triangle_q(1)).vertices.empty());
  CHECK(integer_hull(triangle_q(2)).vertices.empty());

  // no-good P with n=3, S={0}: one row sum x >= 1/2.
  Polytope ng(3, 0, {make_ge(constant(3, 1), Rational(1, 2))}, true);
  auto hull = integer_hull(ng);
  CHECK(hull.vertices.size() == 7);
  REQUIRE(hull.facets.has_value());
  std::set<std::pair<std::vector<Rational>, Rational>> keys;
  for (const auto& f : *hull.facets)
    keys.insert({{f.coeffs.begin(), f.coeffs.end()}, f.rhs});
  CHECK(keys.size() == 7);
  CHECK(keys.count({{1, 1, 1}, 1}) == 1);     // sum >= 1
  CHECK(keys.count({{1, 0, 0}, 0}) == 1);     // x1 >= 0
  CHECK(keys.count({{-1, 0, 0}, -1}) == 1);   // x1 <= 1
}

TEST_CASE("hull equality and witness detection") {
  Polytope k3 = stable_set_k(3);
  auto hull = integer_hull(k3);

  // The tree that branches each variable once: atoms are integral.
  std::vector<Polytope> atoms;
  atoms.push_back(k3.face(0, 1));
  atoms.push_back(k3.face(0, 0).face(1, 1));
  atoms.push_back(k3.face(0, 0).face(1, 0).face(2, 1));
  atoms.push_back(k3.face(0, 0).face(1, 0).face(2, 0));
  Polytope relax = balas_union(atoms);
  auto cmp = equals_integer_hull(relax, hull);
  CHECK(cmp.equal());
  CHECK(contains(relax, hull));

  // P itself strictly contains the hull: expect a witness violating sum <= 1.
  auto cmp2 = equals_integer_hull(k3, hull);
  REQUIRE(cmp2.kind == HullComparison::Kind::kWitness);
  CHECK(dot(constant(3, 1), cmp2.witness) > Rational(1));

  // Identity case.
  Polytope as_rows(3, 0, *hull.facets, false);
  CHECK(equals_integer_hull(as_rows, hull).equal());

  // The projected tree relaxation equals the enumerated hull (derived check).
  Polytope shadow = project(relax, {0, 1, 2});
  CHECK(equals_integer_hull(shadow, hull).equal());
}

TEST_CASE("dash witness on a segment and on the R3 example data") {
  VPointSet fp1;
  fp1.points.push_back(RVector{0});
  VPointSet r1;
  r1.points.push_back(RVector{1});
  RVector w1 = dash_witness(fp1, r1, RVector{1}, 0);
  CHECK(w1[0] > Rational(0));
  CHECK(w1[0] <= Rational(1));

  RVector a{0, -1, 1};
  VPointSet fp;
  fp.points = {RVector{0, 0, 0}, RVector{1, 0, 0}, RVector{0, 1, 1}};
  VPointSet beyond;
  beyond.points = {RVector{0, 0, Rational(1, 2)},
                   RVector{Rational(1, 2), 0, 1},
                   RVector{1, Rational(1, 2), 1}};
  RVector w = dash_witness(fp, beyond, a, 0);
  CHECK(dot(a, w) > Rational(0));  // x3 > x2
  // w lies in conv(fp + {r}) for every r: verify by explicit hulls.
  for (const auto& r : beyond.points) {
    VPointSet pts = fp;
    pts.points.push_back(r);
    Polytope hull(3, 0, hull_facets(pts, 3), false);
    CHECK(is_member(hull, w));
  }

  VPointSet off;
  off.points = {RVector{0, 0, 1}, RVector{1, 0, 0}, RVector{0, 1, 1}};
  CHECK_THROWS_AS(dash_witness(off, beyond, a, 0), std::invalid_argument);
  VPointSet collinear;
  collinear.points = {RVector{0, 0, 0}, RVector{1, 0, 0}, RVector{2, 0, 0}};
  CHECK_THROWS_AS(dash_witness(collinear, beyond, a, 0),
                  std::invalid_argument);
}

TEST_CASE("projection soundness on random lifted systems") {
  std::mt19937_64 rng(20260809);
  for (int it = 0; it < 6; ++it) {
    // Random parts inside [0,1]^2, then compare the FM projection of their
    // Balas union with the explicit vertex-route hull.
    std::vector<Polytope> parts;
    for (int p = 0; p < 2; ++p) {
      std::vector<LinearConstraint> rows;
      for (int r = 0; r < 2; ++r) {
        RVector aa(2);
        for (int i = 0; i < 2; ++i)
          aa[i] = Rational(static_cast<long>(rng() % 7) - 3);
        Rational rhs = dot(aa, constant(2, Rational(1, 2)));
        rows.push_back(make_ge(std::move(aa),
                               rhs - Rational(static_cast<long>(rng() % 2))));
      }
      parts.emplace_back(2, 0, std::move(rows), true);
    }
    Polytope ef = balas_union(parts);
    Polytope fm = project(ef, {0, 1});
    Polytope vroute = explicit_union_hull(parts);
    CHECK(rows_describe_same_set(fm, vroute, rng));
    CHECK(rows_describe_same_set(fm, ef, rng));
  }
}

TEST_CASE("redundancy removal keeps the feasible set") {
  std::vector<LinearConstraint> rows = {
      make_ge(RVector{1, 0}, 0), make_ge(RVector{0, 1}, 0),
      make_le(RVector{1, 0}, 1), make_le(RVector{0, 1}, 1),
      make_le(RVector{1, 1}, 5),   // redundant
      make_ge(RVector{1, 1}, -3),  // redundant
  };
  auto kept = remove_redundant_rows(rows, 2);
  CHECK(kept.size() == 4);

  auto infeasible = remove_redundant_rows(
      {make_ge(RVector{1, 0}, 1), make_le(RVector{1, 0}, 0)}, 2);
  REQUIRE(infeasible.size() == 1);
  CHECK(infeasible[0].coeffs.is_zero());
  CHECK(infeasible[0].rhs > Rational(0));
}

TEST_CASE("empty polytope flows through every operation") {
  Polytope e = Polytope::empty(3);
  CHECK(is_empty(e));
  CHECK(!is_member(e, constant(3, Rational(1, 2))));
  CHECK(vertices(e).empty());
  CHECK(integer_hull(e).vertices.empty());
  auto hull = integer_hull(e);
  CHECK(equals_integer_hull(e, hull).equal());
  CHECK(!equals_integer_hull(Polytope::box(3), hull).equal());
  // All-empty unions collapse to the empty polytope.
  Polytope u = balas_union({e, e});
  CHECK(is_empty(u));
  CHECK(is_empty(explicit_union_hull({e, e})));
}

TEST_CASE("facets are tight at enough affinely independent vertices") {
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 5; ++it) {
    std::vector<LinearConstraint> rows;
    for (int r = 0; r < 3; ++r) {
      RVector a(3);
      for (int i = 0; i < 3; ++i)
        a[i] = Rational(static_cast<long>(rng() % 7) - 3);
      Rational rhs = dot(a, constant(3, Rational(1, 2)));
      rows.push_back(make_ge(std::move(a), rhs - 1));
    }
    Polytope p(3, 0, std::move(rows), true);
    auto vs = vertices(p);
    if (vs.empty()) continue;
    auto facets = hull_facets(vs, 3);
    int adim = affine_rank(vs.points) - 1;
    for (const auto& f : facets) {
      std::vector<RVector> tight;
      for (const auto& v : vs.points)
        if (dot(f.coeffs, v) == f.rhs) tight.push_back(v);
      if (f.sense == Sense::kGe) {
        REQUIRE(!tight.empty());
        CHECK(affine_rank(tight) >= adim);
      }
      for (const auto& v : vs.points) CHECK(f.satisfied_by(v));
    }
  }
}
