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

/// Hard budgets of the exhaustive solvers.
inline constexpr Index kMaxPathDpPoints = 22;
inline constexpr Index kMaxBacktrackPoints = 14;

/// Optimal bottleneck of a degree-K spanning tree and a tree achieving it.
/// For K = 2 the witness is a Hamiltonian path.
struct ExactResult {
  int k = 0;
  double value = 0.0;
  Tree witness;
};

struct RatioReport {
  int k = 0;
  double exact_value = 0.0;
  double bst_value = 0.0;
  double ratio = 1.0;
};

/// Sorted distinct pairwise distances: the only values an optimal
/// bottleneck can take.
std::vector<double> candidate_lengths(const PointSet& ps);

/// A spanning tree of maximum degree <= k using only pairs at distance
/// <= lambda, if one exists. Exhaustive: nullopt means none exists.
std::optional<Tree> degree_bounded_tree_within(const PointSet& ps, int k, double lambda);

/// A Hamiltonian path using only pairs at distance <= lambda, if one exists.
std::optional<Tree> hamiltonian_path_within(const PointSet& ps, double lambda);

/// Minimal bottleneck over spanning trees with max degree <= k (k in 2..5).
/// Throws BudgetExceeded beyond kMaxPathDpPoints (k = 2) or
/// kMaxBacktrackPoints (k >= 3) points.
ExactResult exact_bottleneck_tree(const PointSet& ps, int k);

/// Minimal bottleneck Hamiltonian path, by subset DP over (set, endpoint).
ExactResult bottleneck_hamiltonian_path(const PointSet& ps);

/// exact_bottleneck_tree(ps, k).value over the EMST bottleneck.
RatioReport ratio(const PointSet& ps, int k);

}  // namespace bbst
