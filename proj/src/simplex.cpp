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

#include "cutbranch/simplex.hpp"

#include <stdexcept>

namespace cutbranch {

namespace {

class Engine {
 public:
  Engine(int k, const std::vector<SparseCol>& cols, const RVector& rhs,
         const RVector& obj)
      : k_(k),
        m_(static_cast<int>(cols.size())),
        cols_(cols),
        obj_(obj),
        rhs_(rhs) {
    if (rhs.dim() != k_) throw std::invalid_argument("simplex: rhs dim");
    if (obj_.dim() != m_) throw std::invalid_argument("simplex: obj dim");
    for (const auto& col : cols_)
      for (const auto& [r, v] : col.entries)
        if (r < 0 || r >= k_) throw std::invalid_argument("simplex: row index");
    sign_.assign(k_, 1);
    wb_ = rhs;
    for (int i = 0; i < k_; ++i) {
      if (wb_[i] < Rational(0)) {
        sign_[i] = -1;
        wb_[i] = -wb_[i];
      }
    }
    binv_.assign(k_, RVector(k_));
    for (int i = 0; i < k_; ++i) binv_[i][i] = 1;
    basis_.resize(k_);
    for (int i = 0; i < k_; ++i) basis_[i] = m_ + i;  // artificial i
    in_basis_.assign(m_, false);
    dropped_.assign(k_, false);
  }

  StandardFormSimplex::Result run() {
    StandardFormSimplex::Result res;
    res.pivots = 0;

    // Phase 1: maximize minus the sum of artificials.
    PhaseEnd p1 = iterate(/*phase1=*/true);
    if (p1.kind == PhaseEnd::Kind::kUnboundedPhase)
      throw std::logic_error("simplex: phase 1 unbounded");
    if (phase_value(/*phase1=*/true) < Rational(0)) {
      res.status = StandardFormSimplex::Status::kInfeasible;
      res.row_multipliers = unsigned_multipliers(/*phase1=*/true);
      check_infeasibility_multipliers(res.row_multipliers);
      res.pivots = pivots_;
      return res;
    }
    drive_out_artificials();

    PhaseEnd p2 = iterate(/*phase1=*/false);
    if (p2.kind == PhaseEnd::Kind::kUnboundedPhase) {
      res.status = StandardFormSimplex::Status::kUnbounded;
      res.ray = RVector(m_);
      res.ray[p2.entering] = 1;
      for (int i = 0; i < k_; ++i)
        if (basis_[i] < m_ && !p2.direction[i].is_zero())
          res.ray[basis_[i]] = -p2.direction[i];
      res.ray_base = current_solution();
      check_ray(res.ray);
      check_solution(res.ray_base);
      res.pivots = pivots_;
      return res;
    }

    res.status = StandardFormSimplex::Status::kOptimal;
    res.solution = current_solution();
    check_solution(res.solution);
    res.value = dot(obj_, res.solution);
    res.row_multipliers = unsigned_multipliers(/*phase1=*/false);
    if (dot(res.row_multipliers, rhs_) != res.value)
      throw std::logic_error("simplex: duality mismatch");
    res.pivots = pivots_;
    return res;
  }

 private:
  struct PhaseEnd {
    enum class Kind { kOptimalPhase, kUnboundedPhase };
    Kind kind = Kind::kOptimalPhase;
    int entering = -1;
    RVector direction;
  };

  Rational obj_coeff(bool phase1, int var) const {
    if (phase1) return var >= m_ ? Rational(-1) : Rational(0);
    return var >= m_ ? Rational(0) : obj_[var];
  }

  // z = f_B . B^{-1}, relative to the sign-flipped rows.
  RVector multipliers(bool phase1) const {
    RVector z(k_);
    for (int i = 0; i < k_; ++i) {
      Rational f = obj_coeff(phase1, basis_[i]);
      if (f.is_zero()) continue;
      for (int r = 0; r < k_; ++r)
        if (!binv_[i][r].is_zero()) z[r] += f * binv_[i][r];
    }
    return z;
  }

  // Multipliers relative to the original (unflipped) rows.
  RVector unsigned_multipliers(bool phase1) const {
    RVector z = multipliers(phase1);
    for (int r = 0; r < k_; ++r)
      if (sign_[r] < 0) z[r] = -z[r];
    return z;
  }

  Rational phase_value(bool phase1) const {
    Rational v;
    for (int i = 0; i < k_; ++i) {
      Rational f = obj_coeff(phase1, basis_[i]);
      if (!f.is_zero()) v += f * wb_[i];
    }
    return v;
  }

  // z . (signed column j).
  Rational price(const RVector& z, int j) const {
    Rational s;
    for (const auto& [r, v] : cols_[j].entries) {
      if (z[r].is_zero()) continue;
      s += sign_[r] < 0 ? -(z[r] * v) : z[r] * v;
    }
    return s;
  }

  RVector direction(int j) const {
    RVector d(k_);
    for (const auto& [r, v] : cols_[j].entries) {
      Rational sv = sign_[r] < 0 ? -v : v;
      for (int i = 0; i < k_; ++i)
        if (!binv_[i][r].is_zero()) d[i] += binv_[i][r] * sv;
    }
    return d;
  }

  void pivot(int enter, int leave, const RVector& d) {
    Rational theta = wb_[leave] / d[leave];
    for (int i = 0; i < k_; ++i) {
      if (i == leave || d[i].is_zero()) continue;
      wb_[i] -= theta * d[i];
    }
    wb_[leave] = theta;
    Rational inv = Rational(1) / d[leave];
    binv_[leave] *= inv;
    for (int i = 0; i < k_; ++i) {
      if (i == leave || d[i].is_zero()) continue;
      const Rational& f = d[i];
      for (int c = 0; c < k_; ++c)
        if (!binv_[leave][c].is_zero()) binv_[i][c] -= f * binv_[leave][c];
    }
    int old = basis_[leave];
    if (old < m_) in_basis_[old] = false;
    basis_[leave] = enter;
    in_basis_[enter] = true;
    ++pivots_;
  }

  PhaseEnd iterate(bool phase1) {
    while (true) {
      RVector z = multipliers(phase1);
      int enter = -1;
      for (int j = 0; j < m_; ++j) {
        if (in_basis_[j]) continue;
        Rational rc = obj_coeff(phase1, j) - price(z, j);
        if (rc > Rational(0)) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return {PhaseEnd::Kind::kOptimalPhase, -1, RVector()};
      RVector d = direction(enter);
      int leave = -1;
      Rational best;
      for (int i = 0; i < k_; ++i) {
        if (dropped_[i] || d[i] <= Rational(0)) continue;
        Rational ratio = wb_[i] / d[i];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0)
        return {PhaseEnd::Kind::kUnboundedPhase, enter, std::move(d)};
      pivot(enter, leave, d);
    }
  }

  // After a zero-value phase 1, pivot basic artificials out where a real
  // column has a nonzero tableau entry in their row; otherwise the row is a
  // linear consequence of the others and is marked dropped. Dropped rows keep
  // a zero tableau row for every real column from then on, so later pivots
  // never touch them.
  void drive_out_artificials() {
    for (int i = 0; i < k_; ++i) {
      if (basis_[i] < m_) continue;
      int found = -1;
      for (int j = 0; j < m_ && found < 0; ++j) {
        if (in_basis_[j]) continue;
        Rational entry;
        for (const auto& [r, v] : cols_[j].entries) {
          if (binv_[i][r].is_zero()) continue;
          entry += sign_[r] < 0 ? -(binv_[i][r] * v) : binv_[i][r] * v;
        }
        if (!entry.is_zero()) found = j;
      }
      if (found < 0) {
        dropped_[i] = true;
        continue;
      }
      RVector d = direction(found);
      pivot(found, i, d);  // wb_[i] == 0, degenerate pivot
    }
  }

  RVector current_solution() const {
    RVector w(m_);
    for (int i = 0; i < k_; ++i)
      if (basis_[i] < m_) w[basis_[i]] = wb_[i];
    return w;
  }

  // Exactness audits; these throw only on internal bugs.
  void check_solution(const RVector& w) const {
    for (int j = 0; j < m_; ++j)
      if (w[j] < Rational(0))
        throw std::logic_error("simplex: negative component");
    RVector acc(k_);
    for (int j = 0; j < m_; ++j) {
      if (w[j].is_zero()) continue;
      for (const auto& [r, v] : cols_[j].entries) acc[r] += w[j] * v;
    }
    for (int i = 0; i < k_; ++i)
      if (acc[i] != rhs_[i])
        throw std::logic_error("simplex: solution fails equality system");
  }

  void check_ray(const RVector& ray) const {
    RVector acc(k_);
    for (int j = 0; j < m_; ++j) {
      if (ray[j] < Rational(0))
        throw std::logic_error("simplex: ray sign");
      if (ray[j].is_zero()) continue;
      for (const auto& [r, v] : cols_[j].entries) acc[r] += ray[j] * v;
    }
    for (int i = 0; i < k_; ++i)
      if (!acc[i].is_zero())
        throw std::logic_error("simplex: ray not in kernel");
    if (dot(obj_, ray) <= Rational(0))
      throw std::logic_error("simplex: ray not improving");
  }

  void check_infeasibility_multipliers(const RVector& z) const {
    for (int j = 0; j < m_; ++j) {
      Rational s;
      for (const auto& [r, v] : cols_[j].entries) s += z[r] * v;
      if (s < Rational(0))
        throw std::logic_error("simplex: bad infeasibility multipliers");
    }
    if (dot(z, rhs_) >= Rational(0))
      throw std::logic_error("simplex: infeasibility multipliers not separating");
  }

  int k_, m_;
  const std::vector<SparseCol>& cols_;
  RVector obj_;
  RVector rhs_;
  std::vector<int> sign_;
  RVector wb_;
  std::vector<RVector> binv_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<bool> dropped_;
  long pivots_ = 0;
};

}  // namespace

StandardFormSimplex::Result StandardFormSimplex::solve(
    int num_rows, const std::vector<SparseCol>& cols, const RVector& rhs,
    const RVector& obj) {
  Engine e(num_rows, cols, rhs, obj);
  return e.run();
}

}  // namespace cutbranch
