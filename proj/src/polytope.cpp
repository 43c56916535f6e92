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

#include "cutbranch/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cutbranch {

Polytope::Polytope(int n, int aux, std::vector<LinearConstraint> rows,
                   bool implicit_box)
    : n_(n), aux_(aux), box_(implicit_box), rows_(std::move(rows)) {
  if (n_ < 0 || aux_ < 0) throw std::invalid_argument("polytope: bad dims");
  for (const auto& row : rows_)
    if (row.coeffs.dim() != n_ + aux_)
      throw std::invalid_argument("polytope: row width mismatch");
}

Polytope Polytope::box(int n) { return Polytope(n, 0, {}, true); }

Polytope Polytope::empty(int n) {
  return Polytope(n, 0, {make_ge(zeros(n), 1)}, false);
}

std::vector<LinearConstraint> Polytope::materialized_rows() const {
  std::vector<LinearConstraint> rows = rows_;
  if (box_) {
    for (int i = 0; i < n_; ++i) {
      rows.push_back(make_ge(unit(dim(), i), 0));
      rows.push_back(make_le(unit(dim(), i), 1));
    }
  }
  return rows;
}

Polytope Polytope::with_rows(std::vector<LinearConstraint> extra) const {
  std::vector<LinearConstraint> rows = rows_;
  for (auto& row : extra) rows.push_back(std::move(row));
  return Polytope(n_, aux_, std::move(rows), box_);
}

Polytope Polytope::face(int var, int bit) const {
  if (var < 0 || var >= n_) throw std::invalid_argument("face: bad variable");
  if (bit != 0 && bit != 1) throw std::invalid_argument("face: bad bit");
  return with_rows({make_eq(unit(dim(), var), bit)});
}

bool Polytope::operator==(const Polytope& o) const {
  return n_ == o.n_ && aux_ == o.aux_ && box_ == o.box_ && rows_ == o.rows_;
}

namespace {

// Substitutes the original coordinates with fixed values; the remaining rows
// range over the aux variables only.
std::vector<LinearConstraint> substitute_originals(const Polytope& p,
                                                   const RVector& x) {
  std::vector<LinearConstraint> reduced;
  auto rows = p.materialized_rows();
  reduced.reserve(rows.size());
  int n = p.original_dim();
  int aux = p.aux_dim();
  for (const auto& row : rows) {
    Rational shift;
    for (int i = 0; i < n; ++i)
      if (!row.coeffs[i].is_zero()) shift += row.coeffs[i] * x[i];
    RVector tail(aux);
    for (int j = 0; j < aux; ++j) tail[j] = row.coeffs[n + j];
    reduced.push_back(LinearConstraint{std::move(tail), row.rhs - shift,
                                       row.sense});
  }
  return reduced;
}

RVector pad_objective(const Polytope& p, const RVector& obj) {
  if (obj.dim() != p.original_dim())
    throw std::invalid_argument("objective must cover original variables");
  RVector full(p.dim());
  for (int i = 0; i < obj.dim(); ++i) full[i] = obj[i];
  return full;
}

RVector truncate_point(const Polytope& p, const RVector& x) {
  RVector out(p.original_dim());
  for (int i = 0; i < p.original_dim(); ++i) out[i] = x[i];
  return out;
}

// Gauss-Jordan state over augmented rows, copied on DFS branches.
class EchelonState {
 public:
  explicit EchelonState(int width) : width_(width) {}

  enum class Push { kNewPivot, kDependent, kInconsistent };

  // aug_row has `width_` entries; the last one is the augmented column when
  // solving, or just another coordinate when used for kernels.
  Push push(RVector row, bool last_is_rhs) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = row[pivot_[k]];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (int c = 0; c < width_; ++c)
        if (!rows_[k][c].is_zero()) row[c] -= factor * rows_[k][c];
    }
    int limit = last_is_rhs ? width_ - 1 : width_;
    int pcol = -1;
    for (int c = 0; c < limit; ++c) {
      if (!row[c].is_zero()) {
        pcol = c;
        break;
      }
    }
    if (pcol < 0) {
      if (last_is_rhs && !row[width_ - 1].is_zero())
        return Push::kInconsistent;
      return Push::kDependent;
    }
    Rational inv = Rational(1) / row[pcol];
    row *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = rows_[k][pcol];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (int c = 0; c < width_; ++c)
        if (!row[c].is_zero()) rows_[k][c] -= factor * row[c];
    }
    rows_.push_back(std::move(row));
    pivot_.push_back(pcol);
    return Push::kNewPivot;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // With rank == width-1 and last_is_rhs pushes, reads off the solution.
  RVector solution() const {
    RVector x(width_ - 1);
    for (std::size_t k = 0; k < rows_.size(); ++k)
      x[pivot_[k]] = rows_[k][width_ - 1];
    return x;
  }

  // Reduces v by the stored pivots (no insertion).
  RVector reduce(RVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = v[pivot_[k]];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (int c = 0; c < width_; ++c)
        if (!rows_[k][c].is_zero()) v[c] -= factor * rows_[k][c];
    }
    return v;
  }

 private:
  int width_;
  std::vector<RVector> rows_;
  std::vector<int> pivot_;
};

// Canonical hyperplane key: scale so the first nonzero coefficient is +1.
std::pair<std::vector<Rational>, Rational> hyperplane_key(const RVector& a,
                                                          const Rational& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (!a[i].is_zero()) {
      Rational inv = Rational(1) / a[i];
      std::vector<Rational> c;
      c.reserve(a.dim());
      for (int j = 0; j < a.dim(); ++j) c.push_back(a[j] * inv);
      return {std::move(c), b * inv};
    }
  }
  return {std::vector<Rational>(a.dim()), b};
}

}  // namespace

bool is_member(const Polytope& p, const RVector& x) {
  if (x.dim() != p.original_dim())
    throw std::invalid_argument("is_member: dimension mismatch");
  if (p.aux_dim() == 0) {
    for (const auto& row : p.materialized_rows())
      if (!row.satisfied_by(x)) return false;
    return true;
  }
  auto reduced = substitute_originals(p, x);
  return lp_feasible_point(reduced, p.aux_dim()).feasible();
}

bool is_empty(const Polytope& p) { return !feasible_point(p).has_value(); }

std::optional<RVector> feasible_point(const Polytope& p) {
  auto res = lp_feasible_point(p.materialized_rows(), p.dim());
  if (!res.feasible()) return std::nullopt;
  return truncate_point(p, *res.point);
}

LPOutcome optimize(const Polytope& p, const RVector& objective, Direction dir) {
  LPProblem lp;
  lp.num_vars = p.dim();
  lp.constraints = p.materialized_rows();
  lp.objective = pad_objective(p, objective);
  lp.direction = dir;
  LPOutcome out = lp_solve(lp);
  if (out.point) out.point = truncate_point(p, *out.point);
  return out;
}

VPointSet vertices(const Polytope& p, const Budgets& budgets) {
  if (p.aux_dim() != 0)
    throw std::invalid_argument("vertices: explicit H-rep required");
  int d = p.original_dim();
  if (d > budgets.max_vertex_dim)
    throw BudgetExceeded("vertices: dimension over budget");
  auto rows = p.materialized_rows();

  EchelonState base(d + 1);
  bool inconsistent_eq = false;
  for (const auto& row : rows) {
    if (row.sense != Sense::kEq) continue;
    RVector aug = row.coeffs;
    aug.push_back(row.rhs);
    if (base.push(std::move(aug), true) == EchelonState::Push::kInconsistent)
      inconsistent_eq = true;
  }
  VPointSet out;
  if (inconsistent_eq) return out;

  // Distinct hyperplanes of the inequality rows.
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<std::pair<RVector, Rational>> planes;
  for (const auto& row : rows) {
    if (row.sense == Sense::kEq) continue;
    if (row.coeffs.is_zero()) continue;
    auto key = hyperplane_key(row.coeffs, row.rhs);
    if (seen.insert(key).second)
      planes.emplace_back(RVector(key.first), key.second);
  }

  std::set<RVector> found;
  long visits = 0;
  auto feasible = [&](const RVector& x) {
    for (const auto& row : rows)
      if (!row.satisfied_by(x)) return false;
    return true;
  };

  // DFS over hyperplane subsets with incremental elimination; dependent or
  // inconsistent additions prune the include branch.
  auto dfs = [&](auto&& self, std::size_t idx, const EchelonState& st) -> void {
    if (++visits > budgets.max_vertex_bases)
      throw BudgetExceeded("vertices: basis enumeration over budget");
    if (st.rank() == d) {
      RVector x = st.solution();
      if (feasible(x)) found.insert(std::move(x));
      return;
    }
    if (idx >= planes.size()) return;
    if (static_cast<int>(planes.size() - idx) < d - st.rank()) return;
    EchelonState with = st;
    RVector aug = planes[idx].first;
    aug.push_back(planes[idx].second);
    if (with.push(std::move(aug), true) == EchelonState::Push::kNewPivot)
      self(self, idx + 1, with);
    self(self, idx + 1, st);
  };
  dfs(dfs, 0, base);

  out.points.assign(found.begin(), found.end());
  return out;
}

std::vector<LinearConstraint> remove_redundant_rows(
    std::vector<LinearConstraint> rows, int dim, const Budgets& budgets) {
  (void)budgets;
  if (!lp_feasible_point(rows, dim).feasible())
    return {make_ge(zeros(dim), 1)};
  std::size_t i = 0;
  while (i < rows.size()) {
    LinearConstraint cand = rows[i];
    std::vector<LinearConstraint> others;
    others.reserve(rows.size() - 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.push_back(rows[j]);
    LPProblem lp;
    lp.num_vars = dim;
    lp.constraints = others;
    lp.objective = cand.coeffs;
    auto implied_ge = [&]() {
      lp.direction = Direction::kMin;
      LPOutcome out = lp_solve(lp);
      return out.status == LPStatus::kOptimal && *out.value >= cand.rhs;
    };
    auto implied_le = [&]() {
      lp.direction = Direction::kMax;
      LPOutcome out = lp_solve(lp);
      return out.status == LPStatus::kOptimal && *out.value <= cand.rhs;
    };
    bool redundant = false;
    switch (cand.sense) {
      case Sense::kGe: redundant = implied_ge(); break;
      case Sense::kLe: redundant = implied_le(); break;
      case Sense::kEq: redundant = implied_ge() && implied_le(); break;
    }
    if (redundant)
      rows.erase(rows.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return rows;
}

namespace {

std::vector<LinearConstraint> dedupe_mixed_rows(
    const std::vector<LinearConstraint>& rows) {
  std::set<std::tuple<int, std::vector<Rational>, Rational>> seen;
  std::vector<LinearConstraint> out;
  for (const auto& row : rows) {
    LinearConstraint c = row.sense == Sense::kLe
                             ? make_ge(-row.coeffs, -row.rhs)
                             : row;
    LinearConstraint canon = canonical_ge_row(c);
    std::vector<Rational> key(canon.coeffs.begin(), canon.coeffs.end());
    if (seen.insert({static_cast<int>(canon.sense), std::move(key), canon.rhs})
            .second)
      out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Polytope project(const Polytope& p, const std::vector<int>& keep,
                 const Budgets& budgets) {
  int full = p.dim();
  std::vector<bool> keep_mask(full, false);
  for (int v : keep) {
    if (v < 0 || v >= p.original_dim())
      throw std::invalid_argument("project: keep index out of range");
    keep_mask[v] = true;
  }

  // Work in >= / = form.
  std::vector<LinearConstraint> rows;
  for (const auto& row : p.materialized_rows()) {
    if (row.sense == Sense::kLe)
      rows.push_back(make_ge(-row.coeffs, -row.rhs));
    else
      rows.push_back(row);
  }

  std::vector<int> elim;
  for (int v = 0; v < full; ++v)
    if (!keep_mask[v]) elim.push_back(v);

  std::vector<bool> alive(full, true);
  while (!elim.empty()) {
    // Prefer a variable sitting in an equality row (substitution is linear);
    // otherwise the one minimizing the pos*neg product.
    int best_z = -1;
    int best_eq_row = -1;
    long best_cost = -1;
    for (int z : elim) {
      int eq_row = -1;
      long pos = 0, neg = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& c = rows[r].coeffs[z];
        if (c.is_zero()) continue;
        if (rows[r].sense == Sense::kEq) {
          if (eq_row < 0) eq_row = static_cast<int>(r);
        } else if (c > Rational(0)) {
          ++pos;
        } else {
          ++neg;
        }
      }
      long cost = eq_row >= 0 ? -1 : pos * neg;
      if (best_z < 0 || cost < best_cost) {
        best_z = z;
        best_eq_row = eq_row;
        best_cost = cost;
      }
    }
    int z = best_z;

    std::vector<LinearConstraint> next;
    if (best_eq_row >= 0) {
      LinearConstraint eq = rows[best_eq_row];
      Rational cz = eq.coeffs[z];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(r) == best_eq_row) continue;
        const Rational& c = rows[r].coeffs[z];
        if (c.is_zero()) {
          next.push_back(rows[r]);
          continue;
        }
        Rational f = c / cz;
        LinearConstraint combo = rows[r];
        for (int j = 0; j < full; ++j)
          if (!eq.coeffs[j].is_zero()) combo.coeffs[j] -= f * eq.coeffs[j];
        combo.rhs -= f * eq.rhs;
        next.push_back(std::move(combo));
      }
    } else {
      std::vector<int> pos, neg;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& c = rows[r].coeffs[z];
        if (c.is_zero())
          next.push_back(rows[r]);
        else if (c > Rational(0))
          pos.push_back(static_cast<int>(r));
        else
          neg.push_back(static_cast<int>(r));
      }
      if (static_cast<long>(next.size()) +
              static_cast<long>(pos.size()) * static_cast<long>(neg.size()) >
          budgets.max_fm_rows)
        throw BudgetExceeded("project: Fourier-Motzkin row budget");
      for (int i : pos) {
        for (int j : neg) {
          const Rational& ci = rows[i].coeffs[z];
          const Rational& cj = rows[j].coeffs[z];
          LinearConstraint combo = make_ge(zeros(full), 0);
          Rational wi = -cj;  // positive
          Rational wj = ci;   // positive
          for (int t = 0; t < full; ++t) {
            Rational v;
            if (!rows[i].coeffs[t].is_zero()) v += wi * rows[i].coeffs[t];
            if (!rows[j].coeffs[t].is_zero()) v += wj * rows[j].coeffs[t];
            combo.coeffs[t] = std::move(v);
          }
          combo.rhs = wi * rows[i].rhs + wj * rows[j].rhs;
          next.push_back(std::move(combo));
        }
      }
    }
    rows = dedupe_mixed_rows(next);
    rows = remove_redundant_rows(std::move(rows), full, budgets);
    alive[z] = false;
    elim.erase(std::find(elim.begin(), elim.end(), z));
  }

  // Re-index to the kept variables (ascending original order).
  std::vector<int> kept_sorted;
  for (int v = 0; v < p.original_dim(); ++v)
    if (keep_mask[v]) kept_sorted.push_back(v);
  int nd = static_cast<int>(kept_sorted.size());
  std::vector<LinearConstraint> final_rows;
  for (const auto& row : rows) {
    for (int v = 0; v < full; ++v)
      if (!alive[v] && !row.coeffs[v].is_zero())
        throw std::logic_error("project: eliminated variable still present");
    RVector c(nd);
    for (int i = 0; i < nd; ++i) c[i] = row.coeffs[kept_sorted[i]];
    if (c.is_zero()) {
      bool ok = row.sense == Sense::kEq ? row.rhs.is_zero()
                                        : row.rhs <= Rational(0);
      if (!ok) return Polytope::empty(nd);
      continue;
    }
    final_rows.push_back(LinearConstraint{std::move(c), row.rhs, row.sense});
  }
  return Polytope(nd, 0, std::move(final_rows), false);
}

Polytope balas_union(const std::vector<Polytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("balas_union: no parts");
  int n = parts[0].original_dim();
  for (const auto& part : parts)
    if (part.original_dim() != n)
      throw std::invalid_argument("balas_union: dimension mismatch");
  if (parts.size() == 1) return parts[0];

  int total = n;
  std::vector<int> offset(parts.size());
  for (std::size_t l = 0; l < parts.size(); ++l) {
    offset[l] = total;
    total += parts[l].dim() + 1;  // copy block + multiplier
  }
  int aux = total - n;

  std::vector<LinearConstraint> rows;
  for (std::size_t l = 0; l < parts.size(); ++l) {
    int base = offset[l];
    int pd = parts[l].dim();
    int lambda = base + pd;
    for (const auto& row : parts[l].materialized_rows()) {
      RVector c(total);
      for (int j = 0; j < pd; ++j) c[base + j] = row.coeffs[j];
      c[lambda] = -row.rhs;
      rows.push_back(LinearConstraint{std::move(c), 0, row.sense});
    }
    rows.push_back(make_ge(unit(total, lambda), 0));
  }
  for (int i = 0; i < n; ++i) {
    RVector c(total);
    c[i] = 1;
    for (std::size_t l = 0; l < parts.size(); ++l) c[offset[l] + i] = -1;
    rows.push_back(LinearConstraint{std::move(c), 0, Sense::kEq});
  }
  RVector lambdas(total);
  for (std::size_t l = 0; l < parts.size(); ++l)
    lambdas[offset[l] + parts[l].dim()] = 1;
  rows.push_back(LinearConstraint{std::move(lambdas), 1, Sense::kEq});

  return Polytope(n, aux, std::move(rows), false);
}

IntegerHull integer_hull(const Polytope& p, const Budgets& budgets,
                         bool with_facets) {
  int n = p.original_dim();
  if (n > budgets.max_integer_hull_dim)
    throw BudgetExceeded("integer_hull: dimension over budget");
  IntegerHull hull;
  bool direct = p.aux_dim() == 0;
  auto rows = p.materialized_rows();
  for (long mask = 0; mask < (1L << n); ++mask) {
    RVector x(n);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    bool inside;
    if (direct) {
      inside = true;
      for (const auto& row : rows)
        if (!row.satisfied_by(x)) {
          inside = false;
          break;
        }
    } else {
      inside = is_member(p, x);
    }
    if (inside) hull.vertices.points.push_back(std::move(x));
  }
  if (with_facets) hull.facets = hull_facets(hull.vertices, n, budgets);
  return hull;
}

std::vector<LinearConstraint> hull_facets(const VPointSet& points, int dim,
                                          const Budgets& budgets) {
  std::set<RVector> uniq(points.points.begin(), points.points.end());
  std::vector<RVector> pts(uniq.begin(), uniq.end());
  if (pts.empty()) return {make_ge(zeros(dim), 1)};
  for (const auto& pt : pts)
    if (pt.dim() != dim)
      throw std::invalid_argument("hull_facets: dimension mismatch");
  if (dim > budgets.max_hull_dim)
    throw BudgetExceeded("hull_facets: dimension over budget");
  if (static_cast<int>(pts.size()) > budgets.max_hull_points)
    throw BudgetExceeded("hull_facets: point count over budget");
  int npts = static_cast<int>(pts.size());

  // Affine-hull equalities: kernel of the [p 1] matrix.
  RMatrix aug(0, dim + 1);
  for (const auto& pt : pts) {
    RVector row = pt;
    row.push_back(1);
    aug.add_row(std::move(row));
  }
  std::vector<RVector> eq_space = kernel_basis(aug);
  int adim = dim - static_cast<int>(eq_space.size());

  std::vector<LinearConstraint> out;
  for (const auto& e : eq_space) {
    RVector a(dim);
    for (int i = 0; i < dim; ++i) a[i] = e[i];
    Rational beta = -e[dim];
    auto key = hyperplane_key(a, beta);
    out.push_back(make_eq(RVector(key.first), key.second));
  }
  if (adim == 0) return out;

  EchelonState eq_state(dim + 1);
  for (const auto& e : eq_space) eq_state.push(e, /*last_is_rhs=*/false);

  // Enumeration guard.
  double combos = 1;
  for (int i = 0; i < adim; ++i)
    combos *= static_cast<double>(npts - i) / static_cast<double>(i + 1);
  if (combos > 2e6)
    throw BudgetExceeded("hull_facets: subset enumeration over budget");

  std::set<std::pair<std::vector<Rational>, Rational>> facet_keys;
  std::vector<std::pair<RVector, Rational>> facets;

  std::vector<int> comb(adim);
  for (int i = 0; i < adim; ++i) comb[i] = i;
  while (true) {
    // Candidate supporting hyperplane through the selected points.
    std::vector<RVector> sel;
    sel.reserve(adim);
    for (int i : comb) sel.push_back(pts[i]);
    if (affine_rank(sel) == adim) {
      RMatrix sm(0, dim + 1);
      for (const auto& s : sel) {
        RVector row = s;
        row.push_back(1);
        sm.add_row(std::move(row));
      }
      RVector cand;
      for (auto& k : kernel_basis(sm)) {
        RVector red = eq_state.reduce(std::move(k));
        if (!red.is_zero()) {
          cand = std::move(red);
          break;
        }
      }
      if (!cand.empty()) {
        RVector a(dim);
        for (int i = 0; i < dim; ++i) a[i] = cand[i];
        Rational beta = -cand[dim];
        if (!a.is_zero()) {
          int seen_pos = 0, seen_neg = 0;
          for (const auto& pt : pts) {
            Rational ev = dot(a, pt) - beta;
            if (ev > Rational(0)) ++seen_pos;
            else if (ev < Rational(0)) ++seen_neg;
            if (seen_pos && seen_neg) break;
          }
          if (!(seen_pos && seen_neg)) {
            if (seen_neg) {
              a = -a;
              beta = -beta;
            }
            LinearConstraint canon = canonical_ge_row(make_ge(a, beta));
            auto dedupe_key = std::make_pair(
                std::vector<Rational>(canon.coeffs.begin(),
                                      canon.coeffs.end()),
                canon.rhs);
            if (facet_keys.insert(dedupe_key).second)
              facets.emplace_back(canon.coeffs, canon.rhs);
          }
        }
      }
    }
    // next combination
    int i = adim - 1;
    while (i >= 0 && comb[i] == npts - adim + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < adim; ++j) comb[j] = comb[j - 1] + 1;
  }

  std::sort(facets.begin(), facets.end(),
            [](const auto& x, const auto& y) {
              if (x.first < y.first) return true;
              if (y.first < x.first) return false;
              return x.second < y.second;
            });
  for (auto& [a, b] : facets) out.push_back(make_ge(std::move(a), std::move(b)));
  return out;
}

bool contains(const Polytope& r, const IntegerHull& h) {
  for (const auto& v : h.vertices.points)
    if (!is_member(r, v)) return false;
  return true;
}

HullComparison equals_integer_hull(const Polytope& r, const IntegerHull& h) {
  if (!h.facets)
    throw std::invalid_argument("equals_integer_hull: facets required");
  HullComparison cmp;
  if (h.vertices.empty()) {
    auto pt = feasible_point(r);
    if (!pt) return cmp;  // both empty
    cmp.kind = HullComparison::Kind::kWitness;
    cmp.witness = std::move(*pt);
    return cmp;
  }
  for (const auto& v : h.vertices.points) {
    if (!is_member(r, v)) {
      cmp.kind = HullComparison::Kind::kHullVertexOutside;
      cmp.witness = v;
      return cmp;
    }
  }
  auto check = [&](const RVector& c, const Rational& rhs,
                   Direction dir) -> std::optional<RVector> {
    LPOutcome out = optimize(r, c, dir);
    if (out.status == LPStatus::kInfeasible)
      throw std::logic_error("equals_integer_hull: non-empty R became empty");
    if (out.status == LPStatus::kUnbounded)
      throw std::runtime_error("equals_integer_hull: unbounded system");
    bool ok = dir == Direction::kMin ? *out.value >= rhs : *out.value <= rhs;
    if (ok) return std::nullopt;
    return out.point;
  };
  for (const auto& facet : *h.facets) {
    std::optional<RVector> w;
    switch (facet.sense) {
      case Sense::kGe:
        w = check(facet.coeffs, facet.rhs, Direction::kMin);
        break;
      case Sense::kLe:
        w = check(facet.coeffs, facet.rhs, Direction::kMax);
        break;
      case Sense::kEq:
        w = check(facet.coeffs, facet.rhs, Direction::kMin);
        if (!w) w = check(facet.coeffs, facet.rhs, Direction::kMax);
        break;
    }
    if (w) {
      cmp.kind = HullComparison::Kind::kWitness;
      cmp.witness = std::move(*w);
      return cmp;
    }
  }
  return cmp;
}

RVector dash_witness(const VPointSet& facet_points, const VPointSet& beyond,
                     const RVector& a, const Rational& b) {
  int n = a.dim();
  if (facet_points.size() != n)
    throw std::invalid_argument("dash_witness: need exactly n facet points");
  if (beyond.empty())
    throw std::invalid_argument("dash_witness: empty beyond set");
  for (const auto& s : facet_points.points)
    if (dot(a, s) != b)
      throw std::invalid_argument("dash_witness: facet point off hyperplane");
  if (affine_rank(facet_points.points) != n)
    throw std::invalid_argument(
        "dash_witness: facet points not affinely independent");
  for (const auto& r : beyond.points)
    if (dot(a, r) <= b)
      throw std::invalid_argument("dash_witness: beyond point not beyond");

  int nr = beyond.size();
  int total = n + nr * (n + 1);
  auto mu = [&](int r, int j) { return n + r * (n + 1) + j; };

  std::vector<LinearConstraint> rows;
  for (int r = 0; r < nr; ++r) {
    for (int i = 0; i < n; ++i) {
      RVector c(total);
      c[i] = 1;
      for (int j = 0; j < n; ++j) c[mu(r, j)] = -facet_points.points[j][i];
      c[mu(r, n)] = -beyond.points[r][i];
      rows.push_back(LinearConstraint{std::move(c), 0, Sense::kEq});
    }
    RVector ones(total);
    for (int j = 0; j <= n; ++j) ones[mu(r, j)] = 1;
    rows.push_back(LinearConstraint{std::move(ones), 1, Sense::kEq});
    for (int j = 0; j <= n; ++j)
      rows.push_back(make_ge(unit(total, mu(r, j)), 0));
  }

  LPProblem lp;
  lp.num_vars = total;
  lp.constraints = std::move(rows);
  lp.objective = RVector(total);
  for (int i = 0; i < n; ++i) lp.objective[i] = a[i];
  lp.direction = Direction::kMax;
  LPOutcome out = lp_solve(lp);
  if (out.status != LPStatus::kOptimal)
    throw std::logic_error("dash_witness: witness LP not optimal");
  RVector x(n);
  for (int i = 0; i < n; ++i) x[i] = (*out.point)[i];
  if (dot(a, x) <= b)
    throw std::logic_error("dash_witness: no strict witness exists");
  return x;
}

Polytope intersect_lifted(const std::vector<Polytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("intersect_lifted: no parts");
  int n = parts[0].original_dim();
  for (const auto& part : parts)
    if (part.original_dim() != n)
      throw std::invalid_argument("intersect_lifted: dimension mismatch");
  int total_aux = 0;
  for (const auto& part : parts) total_aux += part.aux_dim();
  bool box = false;
  for (const auto& part : parts) box = box || part.implicit_box();
  std::vector<LinearConstraint> rows;
  int shift = n;
  for (const auto& part : parts) {
    for (const auto& row : part.rows()) {
      RVector c(n + total_aux);
      for (int i = 0; i < n; ++i) c[i] = row.coeffs[i];
      for (int j = 0; j < part.aux_dim(); ++j)
        c[shift + j] = row.coeffs[n + j];
      rows.push_back(LinearConstraint{std::move(c), row.rhs, row.sense});
    }
    shift += part.aux_dim();
  }
  return Polytope(n, total_aux, std::move(rows), box);
}

Polytope explicit_union_hull(const std::vector<Polytope>& parts,
                             const Budgets& budgets) {
  if (parts.empty())
    throw std::invalid_argument("explicit_union_hull: no parts");
  int n = parts[0].original_dim();
  VPointSet pts;
  std::set<RVector> uniq;
  for (const auto& part : parts) {
    if (part.original_dim() != n)
      throw std::invalid_argument("explicit_union_hull: dimension mismatch");
    for (auto& v : vertices(part, budgets).points) uniq.insert(std::move(v));
  }
  pts.points.assign(uniq.begin(), uniq.end());
  if (pts.empty()) return Polytope::empty(n);
  return Polytope(n, 0, hull_facets(pts, n, budgets), false);
}

}  // namespace cutbranch
