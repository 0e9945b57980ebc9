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

#include "bbst/bounded_tree.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace bbst {

namespace {

std::string slots_to_string(std::span<const double> gaps) {
  std::string s;
  for (double g : gaps) s += (s.empty() ? "" : ", ") + std::to_string(g);
  return "[" + s + "]";
}

// Index of the smallest entry among `candidates`; ties to the lower index.
// Angles closer than the angle tolerance tie, and ties go to the smaller
// slot index; measured regular polygons differ in the last few bits.
bool clearly_less(double a, double b) { return a < b - kAngleEps; }

int argmin(std::span<const double> gaps, std::span<const int> candidates) {
  double m = gaps[candidates.front()];
  for (int c : candidates) m = std::min(m, gaps[c]);
  int best = -1;
  for (int c : candidates) {
    if (!clearly_less(m, gaps[c]) && (best < 0 || c < best)) best = c;
  }
  return best;
}

bool at_most(double angle, double bound) { return angle <= bound + kAngleEps; }

}  // namespace

std::vector<int> choose_angles(std::span<const double> gaps, AngleMode mode) {
  const int d = static_cast<int>(gaps.size());
  std::vector<int> all(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) all[i] = i;

  auto fail = [&](const char* what) -> std::vector<int> {
    throw Error(ErrorKind::LemmaViolated,
                std::string(what) + " at degree " + std::to_string(d) + ", angles " + slots_to_string(gaps));
  };

  switch (d) {
    case 3: {
      const int s = argmin(gaps, all);
      if (!at_most(gaps[s], 120.0)) return fail("no angle <= 120");
      return {s};
    }
    case 4: {
      if (mode == AngleMode::Deg4) {
        const int s = argmin(gaps, all);
        if (!at_most(gaps[s], 90.0)) return fail("no angle <= 90");
        return {s};
      }
      // Nonadjacent pairs are {0,2} and {1,3}; prefer the pair holding the
      // smallest qualifying angle.
      std::optional<std::array<int, 2>> best;
      double best_min = 0.0;
      for (const std::array<int, 2> pair : {std::array{0, 2}, std::array{1, 3}}) {
        const double lo = std::min(gaps[pair[0]], gaps[pair[1]]);
        const double hi = std::max(gaps[pair[0]], gaps[pair[1]]);
        if (!at_most(lo, 90.0) || !at_most(hi, 120.0)) continue;
        if (!best || clearly_less(lo, best_min)) {
          best = pair;
          best_min = lo;
        }
      }
      if (!best) return fail("no nonadjacent pair <= 90 and <= 120");
      return {(*best)[0], (*best)[1]};
    }
    case 5: {
      const int a = argmin(gaps, all);
      const std::array<int, 2> opposite{(a + 2) % 5, (a + 3) % 5};
      const int b = argmin(gaps, opposite);
      if (!at_most(gaps[a], 90.0) || !at_most(gaps[b], 90.0)) {
        return fail("no nonadjacent pair <= 90");
      }
      return {std::min(a, b), std::max(a, b)};
    }
    default:
      throw Error(ErrorKind::PreconditionViolated,
                  "choose_angles needs degree 3, 4 or 5, got " + std::to_string(d));
  }
}

namespace {

std::vector<Index> incident_order(Index v, const RootedTree& rt) {
  std::vector<Index> ring;
  if (rt.parent[v] != kNoParent) ring.push_back(rt.parent[v]);
  ring.insert(ring.end(), rt.children[v].begin(), rt.children[v].end());
  return ring;
}

}  // namespace

std::vector<int> choose_angles(Index v, const RootedTree& rt, const PointSet& ps, AngleMode mode) {
  const auto ring = incident_order(v, rt);
  return choose_angles(radial_gaps(v, ring, ps), mode);
}

namespace {

// Largest edge of T_v + parent(v), for every non-root v.
std::vector<double> local_bottlenecks(const RootedTree& rt, const PointSet& ps) {
  std::vector<double> b(rt.parent.size(), 0.0);
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    const Index v = *it;
    if (rt.parent[v] == kNoParent) continue;
    double m = ps.dist(v, rt.parent[v]);
    for (Index c : rt.children[v]) m = std::max(m, b[c]);
    b[v] = m;
  }
  return b;
}

void check_transform_input(const RootedTree& rt) {
  const Index n = rt.tree.n;
  if (static_cast<Index>(rt.parent.size()) != n || static_cast<Index>(rt.children.size()) != n) {
    throw Error(ErrorKind::PreconditionViolated, "rooted tree is inconsistent with its tree");
  }
  if (n >= 2 && rt.children[rt.root].size() != 1) {
    throw Error(ErrorKind::PreconditionViolated, "root must be a leaf");
  }
  if (max_degree(rt.tree) > 5) {
    throw Error(ErrorKind::PreconditionViolated, "input has a vertex of degree > 5; normalize the MST first");
  }
}

// Mutable edge set shared by every recursion node of one transform run.
class Rewiring {
 public:
  Rewiring(const RootedTree& rt, const PointSet& ps, double factor)
      : ps_(ps), factor_(factor), adj_(adjacency(rt.tree)), attach_(rt.parent.size(), kNoParent) {}

  void remove(Index a, Index b) {
    auto drop = [&](Index x, Index y) {
      auto& row = adj_[x];
      auto it = std::find(row.begin(), row.end(), y);
      if (it == row.end()) {
        throw Error(ErrorKind::InvalidTree,
                    "internal: edge " + std::to_string(a) + "-" + std::to_string(b) + " is not present");
      }
      row.erase(it);
    };
    drop(a, b);
    drop(b, a);
  }

  // Adds edge a-b, asserting it respects the factor for a subtree whose
  // original bottleneck is `local_bottleneck`.
  void add(Index a, Index b, double local_bottleneck) {
    const double len = ps_.dist(a, b);
    const double bound = factor_ * local_bottleneck;
    if (len > bound * (1.0 + kLengthEps) + kLengthEps * 1e-3) {
      throw Error(ErrorKind::GuaranteeViolated,
                  "added edge " + std::to_string(a) + "-" + std::to_string(b) + " has length " +
                      std::to_string(len) + " > " + std::to_string(bound));
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  Index& attach(Index v) { return attach_[v]; }
  int degree(Index v) const { return static_cast<int>(adj_[v].size()); }

  Tree tree() const {
    Tree t{static_cast<Index>(adj_.size()), {}};
    for (Index a = 0; a < t.n; ++a) {
      for (Index b : adj_[a]) {
        if (a < b) t.edges.emplace_back(a, b);
      }
    }
    return t;
  }

 private:
  const PointSet& ps_;
  double factor_;
  Adjacency adj_;
  std::vector<Index> attach_;
};

DegreeBoundedTree finish(const RootedTree& rt, const PointSet& ps, Rewiring& wiring, int k, double factor,
                         std::vector<AttachRecord> records) {
  DegreeBoundedTree out;
  out.tree = canonical(wiring.tree());
  out.k = k;
  out.bottleneck = bottleneck(out.tree, ps).value;
  out.input_bottleneck = bottleneck(rt.tree, ps).value;
  out.factor = factor;
  out.guarantee = factor * out.input_bottleneck;
  out.attachments = std::move(records);
  if (!is_spanning_tree(out.tree) || max_degree(out.tree) > k) {
    throw Error(ErrorKind::GuaranteeViolated, "transform output is not a degree-" + std::to_string(k) +
                                                  " spanning tree");
  }
  return out;
}

// Reroutes one angle slot at v. Slot 0 lies between the parent edge and the
// first child, slot i between children i-1 and i, slot k between the last
// child and the parent edge.
void resolve_slot(int slot, Index v, Index r, std::span<const Index> kids, Rewiring& w, double b) {
  const int k = static_cast<int>(kids.size());
  if (slot == 0 || slot == k) {
    const Index child = slot == 0 ? kids.front() : kids.back();
    w.remove(r, v);
    w.add(r, child, b);
    w.attach(v) = child;
  } else {
    const Index left = kids[slot - 1];
    const Index right = kids[slot];
    w.remove(v, w.attach(left));
    w.add(left, right, b);
  }
}

}  // namespace

DegreeBoundedTree degree4_transform(const RootedTree& rt, const PointSet& ps) {
  check_transform_input(rt);
  const double factor = std::sqrt(2.0);
  Rewiring wiring(rt, ps, factor);
  const auto local_b = local_bottlenecks(rt, ps);
  std::vector<AttachRecord> records;

  // Reverse BFS order: every child subtree is transformed before its parent.
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    const Index v = *it;
    const Index r = rt.parent[v];
    if (r == kNoParent) continue;
    const auto& kids = rt.children[v];
    wiring.attach(v) = v;
    if (kids.size() >= 3) {
      for (int slot : choose_angles(v, rt, ps, AngleMode::Deg4)) {
        resolve_slot(slot, v, r, kids, wiring, local_b[v]);
      }
    }
    records.push_back({v, r, wiring.attach(v), wiring.attach(v) == v});
  }
  return finish(rt, ps, wiring, 4, factor, std::move(records));
}

namespace {

// Labelling of a degree-5 vertex v for the grandchild case: v1..v4 are v's
// children with the pair (v1, v2) on the side where alpha1 + alpha2 <= 150,
// and u1..ul are v1's children with v between u1 and u2 in the mirrored
// rotational sense. `reflected` records whether the labels run clockwise.
struct GrandchildPlan {
  bool reflected = false;
  std::array<Index, 4> vs{};
  std::vector<Index> us;
};

GrandchildPlan plan_grandchild_case(Index v, const RootedTree& rt, const PointSet& ps) {
  const Index r = rt.parent[v];
  const auto& kids = rt.children[v];
  GrandchildPlan plan;
  const double front = ccw_gap(ps[v], ps[r], ps[kids[0]]) + ccw_gap(ps[v], ps[kids[0]], ps[kids[1]]);
  const double back = ccw_gap(ps[v], ps[kids[2]], ps[kids[3]]) + ccw_gap(ps[v], ps[kids[3]], ps[r]);
  plan.reflected = back < front;
  for (int i = 0; i < 4; ++i) plan.vs[i] = plan.reflected ? kids[3 - i] : kids[i];

  std::vector<Index> ord = rt.children[plan.vs[0]];
  if (plan.reflected) std::reverse(ord.begin(), ord.end());
  const std::size_t l = ord.size();
  if (l >= 1) plan.us.push_back(ord[0]);
  for (std::size_t j = l; j-- > 1;) plan.us.push_back(ord[j]);
  return plan;
}

class Degree3Builder {
 public:
  Degree3Builder(const RootedTree& rt, const PointSet& ps)
      : rt_(rt), ps_(ps), wiring_(rt, ps, std::sqrt(3.0)), local_b_(local_bottlenecks(rt, ps)) {}

  DegreeBoundedTree run() {
    const auto n = rt_.parent.size();
    std::vector<char> is_node(n, 0);
    std::vector<std::optional<GrandchildPlan>> plans(n);

    // Top-down: decide which vertices head a recursive subproblem. A
    // degree-5 vertex hands its designated v1 over: v1's children become
    // subproblems while v1 itself is rewired by the grandparent.
    if (n >= 2) is_node[rt_.children[rt_.root].front()] = 1;
    for (Index v : rt_.order) {
      if (!is_node[v]) continue;
      if (rt_.children[v].size() == 4) {
        plans[v] = plan_grandchild_case(v, rt_, ps_);
        for (int i = 1; i < 4; ++i) is_node[plans[v]->vs[i]] = 1;
        for (Index u : plans[v]->us) is_node[u] = 1;
      } else {
        for (Index c : rt_.children[v]) is_node[c] = 1;
      }
    }

    std::vector<AttachRecord> records;
    for (auto it = rt_.order.rbegin(); it != rt_.order.rend(); ++it) {
      const Index v = *it;
      if (!is_node[v]) continue;
      if (plans[v]) {
        grandchild_case(v, *plans[v]);
      } else {
        simple_case(v);
      }
      records.push_back({v, rt_.parent[v], wiring_.attach(v), wiring_.attach(v) == v});
    }
    return finish(rt_, ps_, wiring_, 3, std::sqrt(3.0), std::move(records));
  }

 private:
  void simple_case(Index v) {
    const Index r = rt_.parent[v];
    const auto& kids = rt_.children[v];
    wiring_.attach(v) = v;
    if (kids.size() < 2) return;
    for (int slot : choose_angles(v, rt_, ps_, AngleMode::Deg3)) {
      resolve_slot(slot, v, r, kids, wiring_, local_b_[v]);
    }
  }

  void grandchild_case(Index v, const GrandchildPlan& plan) {
    const Index r = rt_.parent[v];
    const auto [v1, v2, v3, v4] = plan.vs;
    const auto& us = plan.us;
    const std::size_t l = us.size();
    const double b = local_b_[v];

    // Angles measured in the (possibly mirrored) labelling orientation.
    auto gap = [&](Index c, Index from, Index to) {
      return plan.reflected ? ccw_gap(ps_[c], ps_[to], ps_[from]) : ccw_gap(ps_[c], ps_[from], ps_[to]);
    };
    const double alpha1 = gap(v, r, v1);

    auto& w = wiring_;
    auto attach = [&](Index x) { return w.attach(x); };

    w.remove(r, v);
    w.remove(v1, v);
    w.remove(attach(v3), v);
    w.add(v3, v4, b);

    if (l <= 1) {
      w.add(r, v1, b);
      w.add(v1, v2, b);
      w.attach(v) = v1;
      return;
    }

    const Index u1 = us[0];
    const Index u2 = us[1];
    const double gamma1 = gap(v1, v, u1);

    if (l == 2) {
      const double gamma3 = gap(v1, u1, u2);
      if (at_most(gamma3, 120.0)) {
        w.remove(v1, attach(u1));
        w.add(u1, u2, b);
        w.add(r, v1, b);
        w.add(v1, v2, b);
        w.attach(v) = v1;
      } else if (at_most(alpha1 + gamma1, 195.0)) {
        w.add(r, u1, b);
        w.add(v1, v2, b);
        w.attach(v) = u1;
      } else {
        w.add(r, v1, b);
        w.add(u2, v2, b);
        w.attach(v) = v1;
      }
      return;
    }

    const Index u3 = us[2];
    if (l == 4) {
      const Index u4 = us[3];
      w.remove(attach(u3), v1);
      w.add(r, u1, b);
      w.add(u2, v2, b);
      w.add(u3, u4, b);
      w.attach(v) = u1;
      return;
    }

    // l == 3
    const double gamma3 = gap(v1, u3, u2);
    const double gamma4 = gap(v1, u1, u3);
    if (std::max(gamma3, gamma4) >= 120.0 - kAngleEps) {
      w.add(r, u1, b);
      w.add(u2, v2, b);
      w.attach(v) = u1;
    } else if (at_most(alpha1 + gamma1, 195.0)) {
      w.remove(attach(u2), v1);
      w.add(r, u1, b);
      w.add(u2, u3, b);
      w.add(v1, v2, b);
      w.attach(v) = u1;
    } else {
      w.remove(attach(u1), v1);
      w.add(r, v1, b);
      w.add(u1, u3, b);
      w.add(u2, v2, b);
      w.attach(v) = v1;
    }
  }

  const RootedTree& rt_;
  const PointSet& ps_;
  Rewiring wiring_;
  std::vector<double> local_b_;
};

}  // namespace

DegreeBoundedTree degree3_transform(const RootedTree& rt, const PointSet& ps) {
  check_transform_input(rt);
  return Degree3Builder(rt, ps).run();
}

namespace {

enum class Walk { Emit, Free, Near, Far };

}  // namespace

DegreeBoundedTree degree2_path(const Tree& t, const PointSet& ps) {
  const RootedTree rt = root_at_leaf(t, ps);
  const Index n = t.n;

  // Free(v): starts at v, ends anywhere in T_v.
  // Near(v): starts at v, ends at v or a child of v.
  // Far(v):  reverse of Near(v), ends at v.
  // Consecutive emitted vertices are then at most three hops apart.
  std::vector<Index> path;
  path.reserve(static_cast<std::size_t>(n));
  std::vector<std::pair<Walk, Index>> stack{{Walk::Free, rt.root}};
  while (!stack.empty()) {
    const auto [kind, v] = stack.back();
    stack.pop_back();
    const auto& kids = rt.children[v];
    switch (kind) {
      case Walk::Emit:
        path.push_back(v);
        break;
      case Walk::Free:
        if (!kids.empty()) {
          stack.emplace_back(Walk::Free, kids.back());
          for (std::size_t i = kids.size() - 1; i-- > 0;) stack.emplace_back(Walk::Far, kids[i]);
        }
        stack.emplace_back(Walk::Emit, v);
        break;
      case Walk::Near:
        for (std::size_t i = kids.size(); i-- > 0;) stack.emplace_back(Walk::Far, kids[i]);
        stack.emplace_back(Walk::Emit, v);
        break;
      case Walk::Far:
        stack.emplace_back(Walk::Emit, v);
        for (Index c : kids) stack.emplace_back(Walk::Near, c);
        break;
    }
  }

  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Index v : rt.order) {
    if (rt.parent[v] != kNoParent) depth[v] = depth[rt.parent[v]] + 1;
  }
  auto within_three_hops = [&](Index a, Index b) {
    for (int hops = 0; hops <= 3; ++hops) {
      if (a == b) return true;
      if (depth[a] < depth[b]) std::swap(a, b);
      a = rt.parent[a];
    }
    return false;
  };

  Tree out{n, {}};
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!within_three_hops(path[i - 1], path[i])) {
      throw Error(ErrorKind::GuaranteeViolated, "path step exceeds three tree hops");
    }
    out.edges.emplace_back(path[i - 1], path[i]);
  }

  DegreeBoundedTree result;
  result.tree = std::move(out);
  result.k = 2;
  result.bottleneck = bottleneck(result.tree, ps).value;
  result.input_bottleneck = bottleneck(t, ps).value;
  result.factor = 3.0;
  result.guarantee = 3.0 * result.input_bottleneck;
  if (static_cast<Index>(path.size()) != n || !is_spanning_tree(result.tree) || max_degree(result.tree) > 2) {
    throw Error(ErrorKind::GuaranteeViolated, "degree-2 walk is not a Hamiltonian path");
  }
  return result;
}

DegreeBoundedTree approximate(const PointSet& ps, int k) {
  const Tree mst = compute_emst(ps);
  switch (k) {
    case 2: return degree2_path(mst, ps);
    case 3: return degree3_transform(root_at_leaf(mst, ps), ps);
    case 4: return degree4_transform(root_at_leaf(mst, ps), ps);
    case 5: {
      DegreeBoundedTree out;
      out.tree = canonical(mst);
      out.k = 5;
      out.bottleneck = out.input_bottleneck = bottleneck(mst, ps).value;
      out.factor = 1.0;
      out.guarantee = out.bottleneck;
      return out;
    }
    default:
      throw Error(ErrorKind::BadParams, "degree bound must be 2, 3, 4 or 5, got " + std::to_string(k));
  }
}

}  // namespace bbst
