// Copyright 2026 The bbst Authors
//
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

#pragma once

#include <optional>
#include <vector>

#include "bbst/tree.hpp"

namespace bbst {

inline constexpr Index kNoParent = -1;

/// A tree hung from a root. `children[v]` lists v's children counterclockwise
/// starting just after the ray towards parent[v] (for the root: after polar
/// angle 0). `order` is a breadth-first order from the root, so reversing it
/// visits children before parents.
struct RootedTree {
  Tree tree;
  Index root = 0;
  std::vector<Index> parent;
  std::vector<std::vector<Index>> children;
  std::vector<Index> order;
};

/// Prim's O(n^2) Euclidean MST. Ties in length are broken by the
/// lexicographic (min index, max index) order of the edge, which makes the
/// result unique. May contain vertices of degree 6 on tie-degenerate input.
Tree prim_mst(const PointSet& ps);

/// Swaps equal-length edges at 60 degree ties until every vertex has degree
/// at most 5. Total weight is unchanged.
Tree enforce_degree5(Tree t, const PointSet& ps);

/// Euclidean MST with maximum degree at most 5: prim_mst + enforce_degree5.
Tree compute_emst(const PointSet& ps);

/// Roots `t` at a leaf. Without an explicit leaf the lexicographically
/// smallest (x, y) leaf is used.
RootedTree root_at_leaf(const Tree& t, const PointSet& ps, std::optional<Index> leaf = std::nullopt);

/// Roots `t` at any vertex; root_at_leaf delegates here after validation.
RootedTree root_at(const Tree& t, const PointSet& ps, Index root);

}  // namespace bbst
