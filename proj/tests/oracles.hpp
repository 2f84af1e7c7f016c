// Independent reference implementations used only to cross-check library
// results. Deliberately slow and simple; none of them share code with the
// production paths they verify.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qlay/layout.hpp"
#include "qlay/poset.hpp"

namespace oracle {

/// Longest chain in the strict-containment DAG on edge intervals, by
/// memoized DFS over explicit adjacency. Independent of the sort-based
/// computation in the library.
inline int rainbow_brute(const qlay::Layout& layout) {
  const auto& edges = layout.edges();
  int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> inside(m);
  for (int e = 0; e < m; e++) {
    for (int f = 0; f < m; f++) {
      if (e != f && qlay::nests(edges[e], edges[f])) inside[e].push_back(f);
    }
  }
  std::vector<int> memo(m, 0);
  auto longest = [&](auto&& self, int e) -> int {
    if (memo[e]) return memo[e];
    int best = 0;
    for (int f : inside[e]) best = std::max(best, self(self, f));
    return memo[e] = 1 + best;
  };
  int best = 0;
  for (int e = 0; e < m; e++) best = std::max(best, longest(longest, e));
  return best;
}

/// Maximum antichain size by branch-and-bound over elements; fine up to a few
/// dozen elements.
inline int max_antichain_brute(const qlay::Poset& p) {
  int n = p.size();
  std::vector<int> chosen;
  int best = 0;
  auto grow = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (n - from) <= best) return;
    for (int e = from; e < n; e++) {
      bool fits = true;
      for (int c : chosen) fits = fits && !p.comparable(c, e);
      if (!fits) continue;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

/// O(m^2) scan: true iff no two edges in the same queue nest.
inline bool queue_assignment_valid(const qlay::Layout& layout, const qlay::QueueAssignment& qa) {
  const auto& edges = layout.edges();
  for (std::size_t e = 0; e < edges.size(); e++) {
    if (qa.queue_of[e] < 1 || qa.queue_of[e] > qa.k) return false;
    for (std::size_t f = e + 1; f < edges.size(); f++) {
      if (qa.queue_of[e] != qa.queue_of[f]) continue;
      if (qlay::nests(edges[e], edges[f]) || qlay::nests(edges[f], edges[e])) return false;
    }
  }
  return true;
}

/// Checks the three strict-order axioms directly on the closure.
inline bool poset_invariants_hold(const qlay::Poset& p) {
  int n = p.size();
  for (int u = 0; u < n; u++) {
    if (p.less(u, u)) return false;
    for (int v = 0; v < n; v++) {
      if (u != v && p.less(u, v) && p.less(v, u)) return false;
      for (int w = 0; w < n; w++) {
        if (p.less(u, v) && p.less(v, w) && !p.less(u, w)) return false;
      }
    }
  }
  return true;
}

/// Verifies that mapping is a relation-preserving bijection p -> q.
inline bool iso_valid(const qlay::Poset& p, const qlay::Poset& q, const std::vector<int>& mapping) {
  int n = p.size();
  std::vector<char> hit(n, 0);
  for (int v : mapping) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; u++) {
    for (int v = 0; v < n; v++) {
      if (u != v && p.less(u, v) != q.less(mapping[u], mapping[v])) return false;
    }
  }
  return true;
}

/// Chain partition validity: every class pairwise comparable and every element
/// assigned.
inline bool chain_partition_valid(const qlay::Poset& p, const qlay::ChainPartition& cp) {
  if (static_cast<int>(cp.chain_of.size()) != p.size()) return false;
  for (int u = 0; u < p.size(); u++) {
    if (cp.chain_of[u] < 0 || cp.chain_of[u] >= cp.chain_count) return false;
    for (int v = u + 1; v < p.size(); v++) {
      if (cp.chain_of[u] == cp.chain_of[v] && !p.comparable(u, v)) return false;
    }
  }
  return true;
}

}  // namespace oracle
