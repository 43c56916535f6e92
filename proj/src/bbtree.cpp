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

#include "cutbranch/bbtree.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace cutbranch {

BBTree::BBTree() { nodes_.push_back(Node{}); }

int BBTree::num_leaves() const {
  int count = 0;
  for (const auto& nd : nodes_)
    if (nd.is_leaf()) ++count;
  return count;
}

int BBTree::height() const {
  int best = 0;
  for (int id = 0; id < size(); ++id) {
    if (!nodes_[id].is_leaf()) continue;
    int h = 0;
    for (int cur = id; nodes_[cur].parent >= 0; cur = nodes_[cur].parent) ++h;
    best = std::max(best, h);
  }
  return best;
}

std::vector<int> BBTree::leaves() const {
  std::vector<int> out;
  std::vector<int> stack = {root()};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) {
      out.push_back(id);
    } else {
      stack.push_back(nd.one);
      stack.push_back(nd.zero);
    }
  }
  return out;
}

BBTree::PathInfo BBTree::path(int id) const {
  PathInfo info;
  std::vector<std::pair<int, int>> rev;
  for (int cur = id; nodes_[cur].parent >= 0; cur = nodes_[cur].parent)
    rev.emplace_back(nodes_[nodes_[cur].parent].branch_var, nodes_[cur].bit);
  info.fixed.assign(rev.rbegin(), rev.rend());
  info.height = static_cast<int>(info.fixed.size());
  for (auto [var, bit] : info.fixed)
    (bit == 0 ? info.j0 : info.j1).push_back(var);
  std::sort(info.j0.begin(), info.j0.end());
  std::sort(info.j1.begin(), info.j1.end());
  return info;
}

bool BBTree::canonical() const {
  for (int id = 0; id < size(); ++id) {
    if (!nodes_[id].is_leaf()) continue;
    PathInfo info = path(id);
    std::set<int> seen;
    for (auto [var, bit] : info.fixed)
      if (!seen.insert(var).second) return false;
  }
  return true;
}

std::pair<int, int> BBTree::branch(int id, int var) {
  if (!nodes_[id].is_leaf()) throw std::invalid_argument("branch: not a leaf");
  if (var < 0) throw std::invalid_argument("branch: bad variable");
  int zero = size();
  int one = zero + 1;
  nodes_.push_back(Node{-1, -1, -1, id, 0});
  nodes_.push_back(Node{-1, -1, -1, id, 1});
  nodes_[id].branch_var = var;
  nodes_[id].zero = zero;
  nodes_[id].one = one;
  return {zero, one};
}

Polytope atom(const Polytope& p, const BBTree& tree, int node_id) {
  if (node_id < 0 || node_id >= tree.size())
    throw std::invalid_argument("atom: bad node");
  auto info = tree.path(node_id);
  std::vector<LinearConstraint> extra;
  for (auto [var, bit] : info.fixed) {
    if (var >= p.original_dim())
      throw std::invalid_argument("atom: branch variable out of range");
    extra.push_back(make_eq(unit(p.dim(), var), bit));
  }
  return p.with_rows(std::move(extra));
}

Polytope tree_relaxation(const Polytope& p, const BBTree& tree,
                         bool drop_empty) {
  std::vector<Polytope> atoms;
  for (int leaf : tree.leaves()) {
    Polytope a = atom(p, tree, leaf);
    if (drop_empty && is_empty(a)) continue;
    atoms.push_back(std::move(a));
  }
  if (atoms.empty()) return Polytope::empty(p.original_dim());
  return balas_union(atoms);
}

bool separates(const Polytope& p, const BBTree& tree, const RVector& x) {
  return !is_member(tree_relaxation(p, tree), x);
}

BBTree build_skewed_k_tree(int n, int k, const std::vector<int>& perm) {
  if (k < 1 || k > n) throw std::invalid_argument("skewed tree: bad k");
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("skewed tree: bad permutation size");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("skewed tree: not a permutation");
    seen[v] = true;
  }
  BBTree tree;
  // (node, position in perm, ones so far)
  std::vector<std::tuple<int, int, int>> stack = {{tree.root(), 0, 0}};
  while (!stack.empty()) {
    auto [id, pos, ones] = stack.back();
    stack.pop_back();
    if (pos == n || ones >= k) continue;
    auto [zero, one] = tree.branch(id, perm[pos]);
    stack.emplace_back(zero, pos + 1, ones);
    stack.emplace_back(one, pos + 1, ones + 1);
  }
  return tree;
}

BBTree build_nogood_tree(int n,
                         const std::vector<std::vector<int>>& points) {
  for (const auto& s : points) {
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("nogood tree: point dimension mismatch");
    for (int b : s)
      if (b != 0 && b != 1)
        throw std::invalid_argument("nogood tree: points must be 0/1");
  }
  BBTree tree;
  if (points.empty()) return tree;  // trivial tree
  // (node, depth, indices of points matching the fixed prefix)
  std::vector<std::tuple<int, int, std::vector<int>>> stack;
  std::vector<int> all(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
  stack.emplace_back(tree.root(), 0, std::move(all));
  while (!stack.empty()) {
    auto [id, depth, alive] = stack.back();
    stack.pop_back();
    if (alive.empty() || depth == n) continue;
    auto [zero, one] = tree.branch(id, depth);
    std::vector<int> zeros, ones;
    for (int idx : alive)
      (points[idx][depth] == 0 ? zeros : ones).push_back(idx);
    stack.emplace_back(zero, depth + 1, std::move(zeros));
    stack.emplace_back(one, depth + 1, std::move(ones));
  }
  return tree;
}

int lowest_fractional_rule(const Polytope& atom_p, const VPointSet& verts) {
  (void)atom_p;
  int best = -1;
  for (const auto& v : verts.points)
    for (int i = 0; i < v.dim(); ++i)
      if (!v[i].is_binary() && (best < 0 || i < best)) best = i;
  return best;
}

BBTree build_greedy_integral_tree(const Polytope& p, VariableRule rule,
                                  const Budgets& budgets) {
  if (p.aux_dim() != 0)
    throw std::invalid_argument("greedy tree: explicit H-rep required");
  BBTree tree;
  std::vector<int> pending = {tree.root()};
  while (!pending.empty()) {
    int id = pending.back();
    pending.pop_back();
    Polytope a = atom(p, tree, id);
    auto vs = vertices(a, budgets);
    if (vs.empty()) continue;  // empty atom: leaf
    bool integral = true;
    for (const auto& v : vs.points) {
      for (int i = 0; i < v.dim() && integral; ++i)
        if (!v[i].is_binary()) integral = false;
      if (!integral) break;
    }
    if (integral) continue;
    int var = rule(a, vs);
    if (var < 0) throw std::logic_error("greedy tree: rule returned no variable");
    if (tree.size() + 2 > budgets.max_tree_nodes)
      throw BudgetExceeded("greedy tree: node budget");
    auto [zero, one] = tree.branch(id, var);
    pending.push_back(zero);
    pending.push_back(one);
  }
  return tree;
}

namespace {

struct Shape {
  int var = -1;  // -1 for leaf
  std::shared_ptr<const Shape> zero, one;
  int leaves = 1;
  int height = 0;
};

using ShapePtr = std::shared_ptr<const Shape>;

ShapePtr leaf_shape() {
  static const ShapePtr leaf = std::make_shared<Shape>();
  return leaf;
}

// All canonical shapes over `mask` with height <= h and leaves <= l.
std::vector<ShapePtr> gen_shapes(unsigned mask, int h, int l, long& budget) {
  std::vector<ShapePtr> out = {leaf_shape()};
  if (--budget < 0) throw BudgetExceeded("enumerate_trees: tree budget");
  if (h == 0 || l < 2) return out;
  for (int j = 0; j < 32; ++j) {
    if (!(mask & (1u << j))) continue;
    unsigned rest = mask & ~(1u << j);
    auto subs = gen_shapes(rest, h - 1, l - 1, budget);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        if (a->leaves + b->leaves > l) continue;
        if (--budget < 0) throw BudgetExceeded("enumerate_trees: tree budget");
        auto s = std::make_shared<Shape>();
        s->var = j;
        s->zero = a;
        s->one = b;
        s->leaves = a->leaves + b->leaves;
        s->height = 1 + std::max(a->height, b->height);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

// Shapes in which every leaf has height k or exhausts the variables.
std::vector<ShapePtr> gen_complete_shapes(unsigned mask, int k, long& budget) {
  if (k == 0 || mask == 0) return {leaf_shape()};
  std::vector<ShapePtr> out;
  for (int j = 0; j < 32; ++j) {
    if (!(mask & (1u << j))) continue;
    unsigned rest = mask & ~(1u << j);
    auto subs = gen_complete_shapes(rest, k - 1, budget);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        if (--budget < 0)
          throw BudgetExceeded("enumerate_complete_trees: tree budget");
        auto s = std::make_shared<Shape>();
        s->var = j;
        s->zero = a;
        s->one = b;
        s->leaves = a->leaves + b->leaves;
        s->height = 1 + std::max(a->height, b->height);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

void shape_to_tree(const ShapePtr& s, BBTree& tree, int at) {
  if (s->var < 0) return;
  auto [zero, one] = tree.branch(at, s->var);
  shape_to_tree(s->zero, tree, zero);
  shape_to_tree(s->one, tree, one);
}

BBTree materialize(const ShapePtr& s) {
  BBTree tree;
  shape_to_tree(s, tree, tree.root());
  return tree;
}

}  // namespace

void enumerate_trees(int n, int max_height, int max_leaves,
                     const std::function<void(const BBTree&)>& yield,
                     const Budgets& budgets) {
  if (n < 0 || n > 31) throw std::invalid_argument("enumerate_trees: bad n");
  int h = max_height < 0 ? n : std::min(max_height, n);
  long l = max_leaves < 0 ? (1L << std::min(n, 30)) : max_leaves;
  unsigned mask = n == 0 ? 0u : (1u << n) - 1u;
  auto shapes = gen_shapes(mask, h, static_cast<int>(std::min<long>(l, 1 << 30)));
  if (static_cast<long>(shapes.size()) > budgets.max_enum_trees)
    throw BudgetExceeded("enumerate_trees: tree budget");
  for (const auto& s : shapes) yield(materialize(s));
}

std::vector<BBTree> enumerate_trees_vec(int n, int max_height, int max_leaves,
                                        const Budgets& budgets) {
  std::vector<BBTree> out;
  enumerate_trees(n, max_height, max_leaves,
                  [&](const BBTree& t) { out.push_back(t); }, budgets);
  return out;
}

void enumerate_complete_trees(int n, int k,
                              const std::function<void(const BBTree&)>& yield,
                              const Budgets& budgets) {
  if (n < 0 || n > 31)
    throw std::invalid_argument("enumerate_complete_trees: bad n");
  if (k < 0) throw std::invalid_argument("enumerate_complete_trees: bad k");
  unsigned mask = n == 0 ? 0u : (1u << n) - 1u;
  auto shapes = gen_complete_shapes(mask, std::min(k, n));
  if (static_cast<long>(shapes.size()) > budgets.max_enum_trees)
    throw BudgetExceeded("enumerate_complete_trees: tree budget");
  for (const auto& s : shapes) yield(materialize(s));
}

}  // namespace cutbranch
