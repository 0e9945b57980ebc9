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

#include "bbst/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "bbst/emst.hpp"

namespace bbst {

namespace {

using Mask = std::uint32_t;

Mask bit(Index i) { return Mask{1} << i; }

std::vector<Mask> threshold_graph(const PointSet& ps, double lambda) {
  const Index n = ps.size();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (ps.dist(i, j) <= lambda) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  return adj;
}

bool connected(const std::vector<Mask>& adj) {
  const Index n = static_cast<Index>(adj.size());
  const Mask full = bit(n) - 1;
  Mask reached = 1;
  Mask frontier = 1;
  while (frontier) {
    const Index x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adj[x] & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == full;
}

// Exhaustive search for a spanning tree of bounded degree. The tree grows
// from vertex 0; each step either commits or forbids one edge leaving the
// current tree, so every spanning tree is reachable along exactly one branch.
class DegreeBoundedSearch {
 public:
  DegreeBoundedSearch(std::vector<Mask> adj, int k)
      : n_(static_cast<Index>(adj.size())),
        k_(k),
        full_(bit(n_) - 1),
        allowed_(std::move(adj)),
        deg_(static_cast<std::size_t>(n_), 0) {}

  std::optional<Tree> run() {
    if (n_ == 1) return Tree{1, {}};
    if (!connected(allowed_)) return std::nullopt;
    in_tree_ = 1;
    if (!search()) return std::nullopt;
    return Tree{n_, chosen_};
  }

 private:
  bool prune() const {
    const Mask outside = full_ & ~in_tree_;
    Mask open = 0;
    for (Mask m = in_tree_; m; m &= m - 1) {
      const Index x = std::countr_zero(m);
      if (deg_[x] < k_) open |= bit(x);
    }
    // Every outside vertex must still be reachable from a tree vertex with
    // spare degree, possibly through other outside vertices.
    Mask reached = 0;
    Mask frontier = open;
    while (frontier) {
      const Index x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = allowed_[x] & outside & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    if ((reached & outside) != outside) return true;

    // Outside vertices with a single usable neighbor must hang off it.
    std::vector<int> forced(static_cast<std::size_t>(n_), 0);
    for (Mask m = outside; m; m &= m - 1) {
      const Index x = std::countr_zero(m);
      const Mask usable = allowed_[x] & (outside | open);
      if (std::popcount(usable) == 1) ++forced[std::countr_zero(usable)];
    }
    for (Index y = 0; y < n_; ++y) {
      const int spare = (in_tree_ & bit(y)) ? k_ - deg_[y] : k_;
      if (forced[y] > spare) return true;
    }
    return false;
  }

  bool search() {
    if (in_tree_ == full_) return true;
    if (prune()) return false;

    // Branch on the outside vertex with the fewest direct options into the
    // tree, attaching it to the tree vertex with the most spare degree.
    Index best_b = -1;
    int best_count = 0;
    for (Mask m = full_ & ~in_tree_; m; m &= m - 1) {
      const Index b = std::countr_zero(m);
      int count = 0;
      for (Mask c = allowed_[b] & in_tree_; c; c &= c - 1) {
        if (deg_[std::countr_zero(c)] < k_) ++count;
      }
      if (count > 0 && (best_b < 0 || count < best_count)) {
        best_b = b;
        best_count = count;
      }
    }
    if (best_b < 0) return false;
    Index best_a = -1;
    for (Mask c = allowed_[best_b] & in_tree_; c; c &= c - 1) {
      const Index a = std::countr_zero(c);
      if (deg_[a] >= k_) continue;
      if (best_a < 0 || deg_[a] < deg_[best_a]) best_a = a;
    }

    const Index a = best_a;
    const Index b = best_b;
    in_tree_ |= bit(b);
    ++deg_[a];
    ++deg_[b];
    chosen_.emplace_back(a, b);
    if (search()) return true;
    chosen_.pop_back();
    --deg_[a];
    --deg_[b];
    in_tree_ &= ~bit(b);

    allowed_[a] &= ~bit(b);
    allowed_[b] &= ~bit(a);
    const bool found = search();
    allowed_[a] |= bit(b);
    allowed_[b] |= bit(a);
    return found;
  }

  Index n_;
  int k_;
  Mask full_;
  Mask in_tree_ = 0;
  std::vector<Mask> allowed_;
  std::vector<int> deg_;
  std::vector<Edge> chosen_;
};

std::optional<Tree> hamiltonian_path_dp(const std::vector<Mask>& adj) {
  const Index n = static_cast<Index>(adj.size());
  if (n == 1) return Tree{1, {}};
  const std::size_t states = std::size_t{1} << n;
  // ends[S]: endpoints e in S such that some Hamiltonian path of S ends at e.
  std::vector<Mask> ends(states, 0);
  for (Index i = 0; i < n; ++i) ends[bit(i)] = bit(i);
  for (std::size_t s = 1; s < states; ++s) {
    const Mask set = static_cast<Mask>(s);
    if (std::has_single_bit(set)) continue;
    Mask e = 0;
    for (Mask m = set; m; m &= m - 1) {
      const Index x = std::countr_zero(m);
      if (ends[set & ~bit(x)] & adj[x]) e |= bit(x);
    }
    ends[s] = e;
  }
  Mask set = static_cast<Mask>(states - 1);
  if (ends[set] == 0) return std::nullopt;

  Tree path{n, {}};
  Index last = std::countr_zero(ends[set]);
  while (!std::has_single_bit(set)) {
    const Mask rest = set & ~bit(last);
    const Index prev = std::countr_zero(ends[rest] & adj[last]);
    path.edges.emplace_back(prev, last);
    set = rest;
    last = prev;
  }
  return path;
}

template <typename Feasible>
ExactResult minimise(const PointSet& ps, int k, Feasible&& feasible) {
  ExactResult result{k, 0.0, Tree{ps.size(), {}}};
  if (ps.size() == 1) return result;
  const auto cands = candidate_lengths(ps);
  // Smallest feasible candidate; the largest always admits a path.
  std::size_t lo = 0;
  std::size_t hi = cands.size() - 1;
  std::optional<Tree> best = feasible(cands[hi]);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto t = feasible(cands[mid])) {
      hi = mid;
      best = std::move(t);
    } else {
      lo = mid + 1;
    }
  }
  result.value = cands[hi];
  result.witness = canonical(std::move(*best));
  return result;
}

void check_budget(const PointSet& ps, int k) {
  if (k < 2 || k > 5) throw Error(ErrorKind::BadParams, "degree bound must be in 2..5");
  const Index limit = k == 2 ? kMaxPathDpPoints : kMaxBacktrackPoints;
  if (ps.size() > limit) {
    throw Error(ErrorKind::BudgetExceeded, "exact solver for degree " + std::to_string(k) + " handles at most " +
                                               std::to_string(limit) + " points, got " +
                                               std::to_string(ps.size()));
  }
}

}  // namespace

std::vector<double> candidate_lengths(const PointSet& ps) {
  std::vector<double> out;
  const Index n = ps.size();
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) out.push_back(ps.dist(i, j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Tree> degree_bounded_tree_within(const PointSet& ps, int k, double lambda) {
  if (k < 2) throw Error(ErrorKind::BadParams, "degree bound must be at least 2");
  if (ps.size() > 31) throw Error(ErrorKind::BudgetExceeded, "exhaustive search handles at most 31 points");
  return DegreeBoundedSearch(threshold_graph(ps, lambda), k).run();
}

std::optional<Tree> hamiltonian_path_within(const PointSet& ps, double lambda) {
  if (ps.size() > kMaxPathDpPoints) {
    throw Error(ErrorKind::BudgetExceeded, "path DP handles at most " + std::to_string(kMaxPathDpPoints) + " points");
  }
  return hamiltonian_path_dp(threshold_graph(ps, lambda));
}

ExactResult bottleneck_hamiltonian_path(const PointSet& ps) {
  check_budget(ps, 2);
  return minimise(ps, 2, [&](double lambda) { return hamiltonian_path_within(ps, lambda); });
}

ExactResult exact_bottleneck_tree(const PointSet& ps, int k) {
  check_budget(ps, k);
  if (k == 2) return bottleneck_hamiltonian_path(ps);
  return minimise(ps, k, [&](double lambda) { return degree_bounded_tree_within(ps, k, lambda); });
}

RatioReport ratio(const PointSet& ps, int k) {
  const ExactResult exact = exact_bottleneck_tree(ps, k);
  RatioReport r;
  r.k = k;
  r.exact_value = exact.value;
  r.bst_value = bottleneck(compute_emst(ps), ps).value;
  r.ratio = r.bst_value > 0 ? r.exact_value / r.bst_value : 1.0;
  return r;
}

}  // namespace bbst
