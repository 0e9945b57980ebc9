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

#include <compare>
#include <numeric>
#include <vector>

#include "bbst/point_set.hpp"

namespace bbst {

/// Undirected edge, stored with a < b.
struct Edge {
  Index a = 0;
  Index b = 0;

  Edge() = default;
  Edge(Index u, Index v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Spanning tree (or forest under construction) as an edge list over point
/// indices.
struct Tree {
  Index n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Largest edge length of a tree; the quantity every bound in this library
/// is stated in.
struct BottleneckValue {
  double value = 0.0;
};

using Adjacency = std::vector<std::vector<Index>>;

Adjacency adjacency(const Tree& t);
std::vector<int> degrees(const Tree& t);
int max_degree(const Tree& t);

BottleneckValue bottleneck(const Tree& t, const PointSet& ps);
double total_weight(const Tree& t, const PointSet& ps);

/// Number of edges on the unique a-b path; -1 if a and b are disconnected.
int hop_distance(const Tree& t, Index a, Index b);

/// Exactly n-1 in-range, non-loop edges that connect all n vertices.
bool is_spanning_tree(const Tree& t);

/// Tree with sorted, canonically oriented edges, for order-insensitive
/// comparison.
Tree canonical(Tree t);

class UnionFind {
 public:
  explicit UnionFind(Index n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if a and b were already joined.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<Index> parent_;
  std::vector<int> rank_;
};

}  // namespace bbst
