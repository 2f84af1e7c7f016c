#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlay/error.hpp"
#include "qlay/layout.hpp"
#include "qlay/poset.hpp"

namespace qlay {

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Exact queue number with a certifying layout: witness_order realizes qn
/// queues and no linear extension does better.
struct SolveResult {
  int qn = 0;
  std::vector<int> witness_order;
  QueueAssignment witness_assignment;
  SolveStats stats;
  bool optimal = true;
};

/// Search budget exhausted; carries the best layout seen so far, explicitly
/// marked non-optimal.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& message, SolveResult incumbent)
      : Error(ErrorKind::ResourceLimit, message), incumbent_(std::move(incumbent)) {}

  const SolveResult& incumbent() const { return incumbent_; }

 private:
  SolveResult incumbent_;
};

struct BnbOptions {
  std::uint64_t node_limit = 50'000'000;
  /// Pruning is exact; disabling it turns the search into plain exhaustive
  /// enumeration (useful as a slow cross-check).
  bool prune = true;
};

namespace detail {

/// Depth-first enumeration of linear extensions, appending one currently
/// minimal element at a time. The max rainbow of the placed prefix only grows
/// along a branch, so cutting at the incumbent is exact. No down-set
/// memoization: the prefix rainbow depends on the arrangement inside the
/// prefix, not just on which elements were placed, so a down-set key would be
/// unsound.
class QueueNumberSearch {
 public:
  QueueNumberSearch(const Poset& p, const BnbOptions& options)
      : poset_(p), options_(options) {
    int n = p.size();
    covers_ = cover_graph(p).edges;
    preds_into_.assign(n, {});
    succs_from_.assign(n, {});
    cover_indegree_.assign(n, 0);
    for (auto [u, v] : covers_) {
      preds_into_[v].push_back(u);
      succs_from_[u].push_back(v);
      cover_indegree_[v]++;
    }
    pos_.assign(n, -1);
  }

  SolveResult run() {
    auto started = std::chrono::steady_clock::now();
    seed_incumbent();
    try {
      descend(0, 0);
    } catch (const NodeBudgetExhausted&) {
      SolveResult incumbent;
      incumbent.qn = incumbent_k_;
      incumbent.witness_order = incumbent_order_;
      incumbent.optimal = false;
      finish(incumbent, started);
      throw ResourceLimitError("queue-number search exceeded " +
                                   std::to_string(options_.node_limit) + " nodes",
                               std::move(incumbent));
    }
    SolveResult result;
    result.qn = incumbent_k_;
    result.witness_order = incumbent_order_;
    finish(result, started);
    return result;
  }

 private:
  struct NodeBudgetExhausted {};

  void seed_incumbent() {
    if (poset_.realizers()) {
      const auto& [l1, l2] = *poset_.realizers();
      int r1 = rainbow_number(make_layout(poset_, l1)).k;
      int r2 = rainbow_number(make_layout(poset_, l2)).k;
      incumbent_k_ = std::min(r1, r2);
      incumbent_order_ = r1 <= r2 ? l1 : l2;
      return;
    }
    // greedy canonical extension: always the smallest-index minimal element
    int n = poset_.size();
    std::vector<int> order, indeg = cover_indegree_;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
      for (int e = 0; e < n; e++) {
        if (!placed[e] && indeg[e] == 0) {
          placed[e] = 1;
          order.push_back(e);
          for (int v : succs_from_[e]) indeg[v]--;
          break;
        }
      }
    }
    incumbent_k_ = rainbow_number(make_layout(poset_, order)).k;
    incumbent_order_ = order;
  }

  void descend(int depth, int prefix_rainbow) {
    int n = poset_.size();
    if (options_.prune && prefix_rainbow >= incumbent_k_) return;
    if (depth == n) {
      if (prefix_rainbow < incumbent_k_) {
        incumbent_k_ = prefix_rainbow;
        incumbent_order_ = order_;
      }
      return;
    }
    for (int e = 0; e < n; e++) {
      if (pos_[e] != -1 || cover_indegree_[e] != 0) continue;
      if (++nodes_ > options_.node_limit) throw NodeBudgetExhausted{};
      place(e, depth);
      int grown = prefix_rainbow;
      std::size_t added_from = placed_edges_.size();
      // all edges into e share the new right endpoint `depth`, so none of them
      // nests another; score them against the pre-existing edges only
      for (int u : preds_into_[e]) {
        // every pre-existing edge ends before `depth`, so it nests inside
        // (pos(u), depth) iff its left endpoint is right of pos(u)
        int inner = 0;
        for (std::size_t f = 0; f < added_from; f++) {
          if (placed_edges_[f].first > pos_[u]) inner = std::max(inner, placed_edges_[f].second);
        }
        placed_edges_.emplace_back(pos_[u], inner + 1);
        grown = std::max(grown, inner + 1);
      }
      descend(depth + 1, grown);
      placed_edges_.resize(added_from);
      unplace(e);
    }
  }

  void place(int e, int depth) {
    pos_[e] = depth;
    order_.push_back(e);
    for (int v : succs_from_[e]) cover_indegree_[v]--;
  }

  void unplace(int e) {
    pos_[e] = -1;
    order_.pop_back();
    for (int v : succs_from_[e]) cover_indegree_[v]++;
  }

  void finish(SolveResult& result, std::chrono::steady_clock::time_point started) {
    result.witness_assignment = queue_assignment(make_layout(poset_, result.witness_order));
    result.stats.nodes = nodes_;
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }

  const Poset& poset_;
  BnbOptions options_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> preds_into_;
  std::vector<std::vector<int>> succs_from_;
  std::vector<int> cover_indegree_;
  std::vector<int> pos_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> placed_edges_;  // (left position, nesting value)
  std::uint64_t nodes_ = 0;
  int incumbent_k_ = 0;
  std::vector<int> incumbent_order_;
};

}  // namespace detail

/// Exact queue number by branch and bound over linear extensions. The
/// incumbent starts from the better realizer layout when the poset carries
/// realizers, else from the canonical greedy extension.
inline SolveResult exact_qn_bnb(const Poset& p, const BnbOptions& options = {}) {
  return detail::QueueNumberSearch(p, options).run();
}

/// Independent oracle: enumerate every linear extension, score each finished
/// layout from scratch, keep the minimum. No pruning, no incremental state;
/// refuses more than 10 elements.
inline SolveResult brute_force_qn(const Poset& p) {
  if (p.size() > 10) {
    throw Error(ErrorKind::Size, "brute force is limited to 10 elements, got " +
                                     std::to_string(p.size()));
  }
  auto started = std::chrono::steady_clock::now();
  int n = p.size();
  SolveResult result;
  result.qn = -1;
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::uint64_t leaves = 0;

  auto enumerate = [&](auto&& self) -> void {
    if (static_cast<int>(order.size()) == n) {
      leaves++;
      int k = rainbow_number(make_layout(p, order)).k;
      if (result.qn == -1 || k < result.qn) {
        result.qn = k;
        result.witness_order = order;
      }
      return;
    }
    for (int e = 0; e < n; e++) {
      if (placed[e]) continue;
      bool minimal = true;
      p.below(e).for_each([&](int u) { minimal = minimal && placed[u]; });
      if (!minimal) continue;
      placed[e] = 1;
      order.push_back(e);
      self(self);
      order.pop_back();
      placed[e] = 0;
    }
  };
  enumerate(enumerate);

  result.witness_assignment = queue_assignment(make_layout(p, result.witness_order));
  result.stats.nodes = leaves;
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace qlay
