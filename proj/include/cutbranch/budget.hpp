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

#ifndef CUTBRANCH_BUDGET_H_
#define CUTBRANCH_BUDGET_H_

#include <stdexcept>
#include <string>

namespace cutbranch {

// Resource caps for the exponential-in-the-worst-case routines. Exceeding a
// budget raises BudgetExceeded; the CLI maps that to an "undecided" record,
// never to a silent pass.
struct Budgets {
  long max_fm_rows = 20000;        // row cap during Fourier-Motzkin steps
  long max_vertex_bases = 4000000; // tight-set candidates in vertex enumeration
  int max_vertex_dim = 16;         // ambient dimension for vertex enumeration
  int max_hull_dim = 7;            // facet synthesis dimension cap
  int max_hull_points = 64;        // facet synthesis point cap
  int max_integer_hull_dim = 16;   // 0/1 enumeration cap
  long max_enum_trees = 200000;    // enumerated trees per call
  long max_tree_nodes = 4095;      // nodes in a built tree
  int max_sa_level = 6;
  int max_subset_dim = 20;         // bitmask subset enumeration cap
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cutbranch

#endif  // CUTBRANCH_BUDGET_H_
