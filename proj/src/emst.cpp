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

#include "bbst/emst.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <tuple>

namespace bbst {

Tree prim_mst(const PointSet& ps) {
  const Index n = ps.size();
  Tree t{n, {}};
  if (n <= 1) return t;
  t.edges.reserve(static_cast<std::size_t>(n - 1));

  // Key of an outside vertex: its best connecting edge ordered by
  // (length^2, min index, max index). Lengths within the relative length
  // tolerance count as equal, otherwise rounding in generated coordinates
  // (a regular hexagon's rim against its spokes, say) decides ties.
  using Key = std::tuple<double, Index, Index>;
  const auto less = [](const Key& a, const Key& b) {
    const double da = std::get<0>(a);
    const double db = std::get<0>(b);
    if (std::isinf(da) || std::isinf(db) || std::abs(da - db) > 2.0 * kLengthEps * std::max(da, db)) return da < db;
    return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
  };
  const Key none{std::numeric_limits<double>::infinity(), n, n};
  std::vector<Key> key(static_cast<std::size_t>(n), none);
  std::vector<Index> via(static_cast<std::size_t>(n), kNoParent);
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);

  Index current = 0;
  in_tree[0] = 1;
  for (Index step = 1; step < n; ++step) {
    Index best = kNoParent;
    for (Index w = 0; w < n; ++w) {
      if (in_tree[w]) continue;
      const Key cand{ps.dist2(current, w), std::min(current, w), std::max(current, w)};
      if (less(cand, key[w])) {
        key[w] = cand;
        via[w] = current;
      }
      if (best == kNoParent || less(key[w], key[best])) best = w;
    }
    in_tree[best] = 1;
    t.edges.emplace_back(via[best], best);
    current = best;
  }
  return t;
}

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kLengthEps * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Swap {
  Edge remove;
  Edge add;
  Index gains = kNoParent;  // vertex whose degree grows by one
};

std::optional<Swap> find_tie_swap(Index v, const Adjacency& adj, const std::vector<int>& deg,
                                  const PointSet& ps) {
  const auto ring = radial_order(v, adj[v], ps);
  const auto gaps = radial_gaps(v, ring, ps);
  std::optional<Swap> fallback;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Index u = ring[i];
    const Index w = ring[(i + 1) % ring.size()];
    if (std::abs(gaps[i] - 60.0) > kAngleEps) continue;
    const double lu = ps.dist(v, u);
    const double lw = ps.dist(v, w);
    if (!nearly_equal(lu, lw) || !nearly_equal(ps.dist(u, w), lu)) continue;
    // Drop the lexicographically larger of the two spokes.
    const Edge eu(v, u);
    const Edge ew(v, w);
    const bool drop_w = eu < ew;
    Swap s{drop_w ? ew : eu, Edge(u, w), drop_w ? u : w};
    if (deg[s.gains] + 1 <= 5) return s;
    if (!fallback) fallback = s;
  }
  return fallback;
}

}  // namespace

Tree enforce_degree5(Tree t, const PointSet& ps) {
  const std::size_t budget = 6 * static_cast<std::size_t>(t.n) + 6;
  for (std::size_t iter = 0; iter < budget; ++iter) {
    const auto deg = degrees(t);
    const auto it = std::max_element(deg.begin(), deg.end());
    if (it == deg.end() || *it <= 5) return t;
    const Index v = static_cast<Index>(it - deg.begin());
    const auto swap = find_tie_swap(v, adjacency(t), deg, ps);
    if (!swap) {
      throw Error(ErrorKind::NormalizationFailed,
                  "no equal-length 60 degree swap at vertex " + std::to_string(v) + " of degree " +
                      std::to_string(*it));
    }
    std::erase(t.edges, swap->remove);
    t.edges.push_back(swap->add);
  }
  throw Error(ErrorKind::NormalizationFailed, "degree normalization did not converge");
}

Tree compute_emst(const PointSet& ps) { return enforce_degree5(prim_mst(ps), ps); }

RootedTree root_at(const Tree& t, const PointSet& ps, Index root) {
  if (!is_spanning_tree(t)) throw Error(ErrorKind::InvalidTree, "input is not a spanning tree");
  if (root < 0 || root >= t.n) throw Error(ErrorKind::BadParams, "root index out of range");

  RootedTree rt;
  rt.tree = t;
  rt.root = root;
  rt.parent.assign(static_cast<std::size_t>(t.n), kNoParent);
  rt.children.assign(static_cast<std::size_t>(t.n), {});
  rt.order.reserve(static_cast<std::size_t>(t.n));

  const Adjacency adj = adjacency(t);
  std::vector<char> seen(static_cast<std::size_t>(t.n), 0);
  std::deque<Index> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const Index v = queue.front();
    queue.pop_front();
    rt.order.push_back(v);
    std::vector<Index> kids;
    for (Index w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = v;
      kids.push_back(w);
    }
    rt.children[v] = rt.parent[v] == kNoParent ? radial_order(v, kids, ps)
                                               : radial_order_after(v, rt.parent[v], kids, ps);
    for (Index w : rt.children[v]) queue.push_back(w);
  }
  return rt;
}

RootedTree root_at_leaf(const Tree& t, const PointSet& ps, std::optional<Index> leaf) {
  if (!is_spanning_tree(t)) throw Error(ErrorKind::InvalidTree, "input is not a spanning tree");
  const auto deg = degrees(t);
  if (t.n == 1) {
    if (leaf && *leaf != 0) throw Error(ErrorKind::NotALeaf, "index out of range");
    return root_at(t, ps, 0);
  }
  if (leaf) {
    if (*leaf < 0 || *leaf >= t.n || deg[*leaf] != 1) {
      throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(*leaf) + " is not a leaf");
    }
    return root_at(t, ps, *leaf);
  }
  Index best = kNoParent;
  for (Index v = 0; v < t.n; ++v) {
    if (deg[v] != 1) continue;
    if (best == kNoParent ||
        std::make_pair(ps[v](0), ps[v](1)) < std::make_pair(ps[best](0), ps[best](1))) {
      best = v;
    }
  }
  return root_at(t, ps, best);
}

}  // namespace bbst
