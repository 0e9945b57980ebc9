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

#include <span>
#include <vector>

#include "bbst/emst.hpp"

namespace bbst {

/// Which degree bound a transform is producing. Selects the angle budget
/// used when picking which incident edges of a vertex to reroute.
enum class AngleMode { Deg3, Deg4 };

/// One node of the transform's recursion: after transforming T_vertex + parent,
/// `attach` is the only neighbor of `parent` inside that subtree. The child is
/// natural when attach == vertex and adopted otherwise.
struct AttachRecord {
  Index vertex = 0;
  Index parent = 0;
  Index attach = 0;
  bool natural = true;
};

struct DegreeBoundedTree {
  Tree tree;
  int k = 0;
  double bottleneck = 0.0;
  double input_bottleneck = 0.0;
  double factor = 1.0;     // sqrt(2), sqrt(3) or 3
  double guarantee = 0.0;  // factor * input_bottleneck
  std::vector<AttachRecord> attachments;

  double ratio() const { return input_bottleneck > 0 ? bottleneck / input_bottleneck : 1.0; }
};

/// Picks the angle slots at a vertex whose existence the MST angle bounds
/// guarantee. `gaps[i]` is the counterclockwise angle between incident edges
/// i and i+1 (cyclic); the result holds 0-based slot indices in increasing
/// order.
///
///   degree 3:              one slot <= 120
///   degree 4, AngleMode::Deg4: one slot <= 90
///   degree 4, AngleMode::Deg3: two nonadjacent slots, <= 90 and <= 120
///   degree 5:              two nonadjacent slots <= 90
///
/// Ties go to the smaller angle, then to the smaller slot index. Throws
/// LemmaViolated when no qualifying slot exists.
std::vector<int> choose_angles(std::span<const double> gaps, AngleMode mode);

/// Same, for vertex `v` of a rooted tree; incident edges are ordered as
/// parent first, then children counterclockwise.
std::vector<int> choose_angles(Index v, const RootedTree& rt, const PointSet& ps, AngleMode mode);

/// Degree-4 spanning tree with bottleneck at most sqrt(2) times that of the
/// input MST. `rt` must be a degree-5 MST rooted at a leaf.
DegreeBoundedTree degree4_transform(const RootedTree& rt, const PointSet& ps);

/// Degree-3 spanning tree with bottleneck at most sqrt(3) times that of the
/// input MST. `rt` must be a degree-5 MST rooted at a leaf.
DegreeBoundedTree degree3_transform(const RootedTree& rt, const PointSet& ps);

/// Hamiltonian path whose consecutive vertices are at most three hops apart
/// in `t`, hence within 3x its bottleneck.
DegreeBoundedTree degree2_path(const Tree& t, const PointSet& ps);

/// EMST followed by the transform matching `k` (2, 3 or 4; 5 returns the
/// normalized EMST itself).
DegreeBoundedTree approximate(const PointSet& ps, int k);

}  // namespace bbst
