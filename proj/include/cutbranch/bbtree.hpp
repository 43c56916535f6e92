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

#ifndef CUTBRANCH_BBTREE_H_
#define CUTBRANCH_BBTREE_H_

#include <functional>
#include <utility>
#include <vector>

#include "cutbranch/polytope.hpp"

namespace cutbranch {

// Binary variable-disjunction tree. Every node has zero or two children; a
// branch splits x_j = 0 against x_j = 1. Canonical trees never rebranch a
// variable already fixed on the root path. Immutable once built (builders use
// the private mutators through friend functions in this module).
class BBTree {
 public:
  struct Node {
    int branch_var = -1;  // 0-based; -1 for leaves
    int zero = -1;
    int one = -1;
    int parent = -1;
    int bit = -1;  // which side of the parent this node hangs on
    bool is_leaf() const { return branch_var < 0; }
  };

  BBTree();  // single-node tree

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  int num_leaves() const;
  int height() const;
  std::vector<int> leaves() const;  // zero-child-first DFS order

  // Branching bookkeeping along the root path of a node: C_v as (var, bit)
  // pairs in path order, the index sets J0 and J1, and the height |C_v|.
  struct PathInfo {
    std::vector<std::pair<int, int>> fixed;
    std::vector<int> j0, j1;
    int height = 0;
  };
  PathInfo path(int id) const;

  // No variable appears twice on any root path.
  bool canonical() const;

  // Turns leaf `id` into an internal node branching on `var`; returns the
  // (zero, one) child ids.
  std::pair<int, int> branch(int id, int var);

 private:
  std::vector<Node> nodes_;
};

// P plus the equality branching constraints of the node.
Polytope atom(const Polytope& p, const BBTree& tree, int node_id);

// conv of the union of leaf atoms, as a Balas extended formulation. With
// drop_empty, leaf atoms found empty by exact LP are left out (they carry
// zero weight either way); all leaves empty yields the empty polytope.
Polytope tree_relaxation(const Polytope& p, const BBTree& tree,
                         bool drop_empty = true);

// x* is separated when it falls outside the tree relaxation.
bool separates(const Polytope& p, const BBTree& tree, const RVector& x);

// Skewed k-tree: processes variables in permutation order, branching every
// leaf whose one-side count is still below k. perm is a 0-based permutation
// of [n].
BBTree build_skewed_k_tree(int n, int k, const std::vector<int>& perm);

// Tree isolating every point of S (0/1 vectors of length n): variables are
// fixed in index order and each s in S is routed down its matching side;
// subtrees without a surviving point stop immediately. size <= 3 n |S|.
BBTree build_nogood_tree(int n, const std::vector<std::vector<int>>& points);

// Branches while some leaf atom is neither empty nor integral. The rule maps
// (atom, its vertex set) to the branching variable; the default picks the
// lowest-index variable that is fractional in some vertex.
using VariableRule = std::function<int(const Polytope&, const VPointSet&)>;
int lowest_fractional_rule(const Polytope& atom, const VPointSet& verts);
BBTree build_greedy_integral_tree(const Polytope& p,
                                  VariableRule rule = lowest_fractional_rule,
                                  const Budgets& budgets = {});

// All canonical trees over n variables within the height and leaf bounds,
// each yielded exactly once. max_height < 0 means unbounded (= n);
// max_leaves < 0 means unbounded.
void enumerate_trees(int n, int max_height, int max_leaves,
                     const std::function<void(const BBTree&)>& yield,
                     const Budgets& budgets = {});
std::vector<BBTree> enumerate_trees_vec(int n, int max_height, int max_leaves,
                                        const Budgets& budgets = {});

// Canonical trees in which every leaf sits at height k or has all variables
// fixed. Their relaxations realize the height-k operator: any shallower
// canonical tree extends to one of these, and refining only shrinks the
// relaxation.
void enumerate_complete_trees(int n, int k,
                              const std::function<void(const BBTree&)>& yield,
                              const Budgets& budgets = {});

}  // namespace cutbranch

#endif  // CUTBRANCH_BBTREE_H_
