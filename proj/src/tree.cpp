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

#include "bbst/tree.hpp"

#include <algorithm>
#include <deque>

namespace bbst {

Adjacency adjacency(const Tree& t) {
  Adjacency adj(static_cast<std::size_t>(t.n));
  for (const Edge& e : t.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

std::vector<int> degrees(const Tree& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.n), 0);
  for (const Edge& e : t.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

int max_degree(const Tree& t) {
  const auto deg = degrees(t);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

BottleneckValue bottleneck(const Tree& t, const PointSet& ps) {
  double best2 = 0.0;
  for (const Edge& e : t.edges) best2 = std::max(best2, ps.dist2(e.a, e.b));
  return {std::sqrt(best2)};
}

double total_weight(const Tree& t, const PointSet& ps) {
  double w = 0.0;
  for (const Edge& e : t.edges) w += ps.dist(e.a, e.b);
  return w;
}

int hop_distance(const Tree& t, Index a, Index b) {
  if (a == b) return 0;
  const Adjacency adj = adjacency(t);
  std::vector<int> hops(static_cast<std::size_t>(t.n), -1);
  std::deque<Index> queue{a};
  hops[a] = 0;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index w : adj[u]) {
      if (hops[w] >= 0) continue;
      hops[w] = hops[u] + 1;
      if (w == b) return hops[w];
      queue.push_back(w);
    }
  }
  return -1;
}

bool is_spanning_tree(const Tree& t) {
  if (t.n < 1) return false;
  if (static_cast<Index>(t.edges.size()) != t.n - 1) return false;
  UnionFind uf(t.n);
  for (const Edge& e : t.edges) {
    if (e.a < 0 || e.b >= t.n || e.a == e.b) return false;
    if (!uf.unite(e.a, e.b)) return false;
  }
  return true;
}

Tree canonical(Tree t) {
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

}  // namespace bbst
