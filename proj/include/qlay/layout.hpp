#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qlay/error.hpp"
#include "qlay/poset.hpp"

namespace qlay {

/// One cover edge resolved against a vertex order: endpoints as element
/// indices plus their positions (left < right always, since edges point up).
struct LayoutEdge {
  int u = 0, v = 0;        // element indices, u ≺ v in the poset
  int left = 0, right = 0; // positions of u and v in the order
};

/// A linear extension together with the cover edges resolved to position
/// intervals. Owns a copy of the poset so analyses stay self-contained.
class Layout {
 public:
  Layout(Poset poset, std::vector<int> order)
      : poset_(std::move(poset)), order_(std::move(order)) {
    int n = poset_.size();
    pos_.assign(n, -1);
    for (int i = 0; i < n; i++) pos_[order_[i]] = i;
    for (auto [u, v] : cover_graph(poset_).edges) {
      edges_.push_back({u, v, pos_[u], pos_[v]});
    }
  }

  const Poset& poset() const { return poset_; }
  const std::vector<int>& order() const { return order_; }
  int position(int element) const { return pos_[element]; }
  const std::vector<LayoutEdge>& edges() const { return edges_; }

 private:
  Poset poset_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<LayoutEdge> edges_;
};

/// Validates the order and resolves the cover edges. The error message names
/// one violated relation.
inline Layout make_layout(const Poset& p, const std::vector<int>& order) {
  if (!is_linear_extension(p, order)) {
    std::vector<int> pos(p.size());
    for (int i = 0; i < p.size(); i++) pos[order[i]] = i;
    for (int u = 0; u < p.size(); u++) {
      for (int v = 0; v < p.size(); v++) {
        if (p.less(u, v) && pos[u] > pos[v]) {
          throw Error(ErrorKind::Precondition,
                      "order is not a linear extension: " + p.name(u) + " < " + p.name(v) +
                          " but " + p.name(v) + " is placed first");
        }
      }
    }
  }
  return Layout(p, order);
}

inline Layout make_layout(const Poset& p, const std::vector<std::string>& order) {
  return make_layout(p, order_from_names(p, order));
}

/// Pairwise-nesting edges, outermost first, stored as indices into the
/// layout's edge list.
struct Rainbow {
  std::vector<int> edge_ids;
};

struct RainbowResult {
  int k = 0;
  Rainbow witness;
};

/// Nesting is strict: (u,v) nests (a,b) iff u < a < b < v by position, shared
/// endpoints never nest.
inline bool nests(const LayoutEdge& outer, const LayoutEdge& inner) {
  return outer.left < inner.left && inner.right < outer.right;
}

/// Maximum rainbow of the layout: the longest chain in the strict-containment
/// order on edge intervals. Sort by (left asc, right asc); a chain is then a
/// strictly decreasing subsequence of right endpoints, found in O(m log m).
inline RainbowResult rainbow_number(const Layout& l) {
  const auto& edges = l.edges();
  int m = static_cast<int>(edges.size());
  std::vector<int> ids(m);
  for (int e = 0; e < m; e++) ids[e] = e;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return std::make_pair(edges[a].left, edges[a].right) <
           std::make_pair(edges[b].left, edges[b].right);
  });

  // tails[d] = index (into ids order) of the edge ending the best chain of
  // length d+1, i.e. the one with the largest right endpoint
  std::vector<int> tails, parent(m, -1), chain_len(m, 0);
  int best = -1, best_len = 0;
  for (int e : ids) {
    int right = edges[e].right;
    // first chain whose tail right endpoint is <= right gets replaced
    int lo = 0, hi = static_cast<int>(tails.size());
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (edges[tails[mid]].right > right) lo = mid + 1;
      else hi = mid;
    }
    parent[e] = lo > 0 ? tails[lo - 1] : -1;
    chain_len[e] = lo + 1;
    if (lo == static_cast<int>(tails.size())) tails.push_back(e);
    else tails[lo] = e;
    if (chain_len[e] > best_len) {
      best_len = chain_len[e];
      best = e;
    }
  }

  RainbowResult r;
  r.k = best_len;
  for (int e = best; e != -1; e = parent[e]) r.witness.edge_ids.push_back(e);
  std::reverse(r.witness.edge_ids.begin(), r.witness.edge_ids.end());
  return r;
}

/// Queue index per edge, 1..k; queue i collects the edges of nesting depth i,
/// so no two edges in one queue nest and k is forced by the deepest rainbow.
struct QueueAssignment {
  int k = 0;
  std::vector<int> queue_of;  // parallel to Layout::edges()
};

/// Assigns each edge its nesting depth: the size of the largest rainbow having
/// that edge innermost. Fenwick tree over right endpoints, O(m log m). The
/// resulting k independently reproduces rainbow_number(l).k.
inline QueueAssignment queue_assignment(const Layout& l) {
  const auto& edges = l.edges();
  int m = static_cast<int>(edges.size());
  QueueAssignment qa;
  qa.queue_of.assign(m, 0);
  if (m == 0) return qa;

  int n = static_cast<int>(l.order().size());
  // fenwick[i] = max depth among inserted edges with reversed-right index <= i
  std::vector<int> fenwick(n + 1, 0);
  auto update = [&](int i, int val) {
    for (; i <= n; i += i & -i) fenwick[i] = std::max(fenwick[i], val);
  };
  auto query = [&](int i) {
    int best = 0;
    for (; i > 0; i -= i & -i) best = std::max(best, fenwick[i]);
    return best;
  };
  auto rev_index = [&](int right) { return n - right; };  // larger right -> smaller index

  std::vector<int> ids(m);
  for (int e = 0; e < m; e++) ids[e] = e;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return std::make_pair(edges[a].left, edges[a].right) <
           std::make_pair(edges[b].left, edges[b].right);
  });

  // edges sharing a left endpoint cannot contain each other: insert per group
  std::size_t i = 0;
  while (i < ids.size()) {
    std::size_t j = i;
    while (j < ids.size() && edges[ids[j]].left == edges[ids[i]].left) j++;
    for (std::size_t g = i; g < j; g++) {
      int e = ids[g];
      // depth = 1 + deepest inserted edge with strictly larger right endpoint
      qa.queue_of[e] = 1 + query(rev_index(edges[e].right + 1));
      qa.k = std::max(qa.k, qa.queue_of[e]);
    }
    for (std::size_t g = i; g < j; g++) {
      int e = ids[g];
      update(rev_index(edges[e].right), qa.queue_of[e]);
    }
    i = j;
  }
  return qa;
}

enum class PatternKind {
  Bbb,             // same-chain triple straddled by a cover edge
  Abc,             // same-chain pair separated by an element incomparable to both
  Abaab,           // five-element two-chain pattern with two crossing covers
  ConfigI,         // rainbow: two-chain pair of opposite bi-colored edges plus a uni-colored edge
  ConfigII,        // rainbow: three-chain double pair of opposite bi-colored edges
  TransitiveNest,  // rainbow: two edges over one ordered chain pair
};

inline const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Bbb: return "bbb";
    case PatternKind::Abc: return "abc";
    case PatternKind::Abaab: return "abaab";
    case PatternKind::ConfigI: return "config-i";
    case PatternKind::ConfigII: return "config-ii";
    case PatternKind::TransitiveNest: return "transitive-nest";
  }
  return "unknown";
}

/// One occurrence of a forbidden pattern. Witness elements appear in layout
/// order; edge_ids reference the layout's edge list.
struct PatternViolation {
  PatternKind kind;
  std::vector<int> elements;
  std::vector<int> edge_ids;
};

namespace detail {

inline void validate_chain_partition(const Layout& l, const ChainPartition& c) {
  const Poset& p = l.poset();
  if (static_cast<int>(c.chain_of.size()) != p.size()) {
    throw Error(ErrorKind::Input, "chain partition does not cover all elements");
  }
  for (int u = 0; u < p.size(); u++) {
    if (c.chain_of[u] < 0 || c.chain_of[u] >= c.chain_count) {
      throw Error(ErrorKind::Input, "chain index out of range for element " + p.name(u));
    }
    for (int v = u + 1; v < p.size(); v++) {
      if (c.chain_of[u] == c.chain_of[v] && !p.comparable(u, v)) {
        throw Error(ErrorKind::Input, "chain " + std::to_string(c.chain_of[u]) +
                                          " contains incomparable elements " + p.name(u) +
                                          " and " + p.name(v));
      }
    }
  }
}

inline void sort_by_leftmost(std::vector<PatternViolation>& out, const Layout& l) {
  auto key = [&](const PatternViolation& v) {
    std::vector<int> positions;
    for (int e : v.elements) positions.push_back(l.position(e));
    return std::make_pair(positions, static_cast<int>(v.kind));
  };
  std::sort(out.begin(), out.end(),
            [&](const PatternViolation& a, const PatternViolation& b) { return key(a) < key(b); });
}

}  // namespace detail

/// Exhaustively reports the three linear-extension patterns that cannot occur
/// in realizer-based orders of two-dimensional posets (and, for the first, in
/// any linear extension at all):
///   bbb    [b1, b2, b3] on one chain with b1 ≺ b3;
///   abc    [a1, b, a2] with chain(a1) = chain(a2), a1 ∥ b and b ∥ a2;
///   abaab  [a1, b2, a, a2, b1] with chain(a1) = chain(a) = chain(a2),
///          chain(b1) = chain(b2), a1 ≺ b1 and b2 ≺ a2.
inline std::vector<PatternViolation> check_patterns(const Layout& l, const ChainPartition& c) {
  detail::validate_chain_partition(l, c);
  const Poset& p = l.poset();
  const auto& edges = l.edges();
  int n = p.size();
  std::vector<PatternViolation> out;

  for (int e = 0; e < static_cast<int>(edges.size()); e++) {
    auto [b1, b3] = std::pair(edges[e].u, edges[e].v);
    if (c.chain_of[b1] != c.chain_of[b3]) continue;
    for (int b2 = 0; b2 < n; b2++) {
      if (c.chain_of[b2] == c.chain_of[b1] && l.position(b1) < l.position(b2) &&
          l.position(b2) < l.position(b3)) {
        out.push_back({PatternKind::Bbb, {b1, b2, b3}, {e}});
      }
    }
  }

  for (int a1 = 0; a1 < n; a1++) {
    for (int a2 = 0; a2 < n; a2++) {
      if (a1 == a2 || c.chain_of[a1] != c.chain_of[a2]) continue;
      if (l.position(a1) >= l.position(a2)) continue;
      for (int b = 0; b < n; b++) {
        if (l.position(a1) < l.position(b) && l.position(b) < l.position(a2) &&
            p.incomparable(a1, b) && p.incomparable(b, a2)) {
          out.push_back({PatternKind::Abc, {a1, b, a2}, {}});
        }
      }
    }
  }

  for (int e1 = 0; e1 < static_cast<int>(edges.size()); e1++) {
    auto [a1, b1] = std::pair(edges[e1].u, edges[e1].v);
    for (int e2 = 0; e2 < static_cast<int>(edges.size()); e2++) {
      if (e1 == e2) continue;
      auto [b2, a2] = std::pair(edges[e2].u, edges[e2].v);
      if (c.chain_of[a1] != c.chain_of[a2] || c.chain_of[b1] != c.chain_of[b2]) continue;
      if (!(l.position(a1) < l.position(b2) && l.position(b2) < l.position(a2) &&
            l.position(a2) < l.position(b1))) {
        continue;
      }
      for (int a = 0; a < n; a++) {
        if (c.chain_of[a] == c.chain_of[a1] && l.position(b2) < l.position(a) &&
            l.position(a) < l.position(a2)) {
          out.push_back({PatternKind::Abaab, {a1, b2, a, a2, b1}, {e1, e2}});
        }
      }
    }
  }

  detail::sort_by_leftmost(out, l);
  return out;
}

/// Forbidden-configuration scan of one rainbow against a chain partition, plus
/// the uni/bi-colored edge tally used by the w(w+1)/2 counting argument.
struct RainbowConfigReport {
  std::vector<PatternViolation> violations;
  int uni_colored = 0;
  int bi_colored = 0;
};

/// Checks a rainbow for the structures the counting argument rules out:
///   transitive-nest  two edges whose endpoints lie on one ordered chain pair;
///   config-i         per chain pair (A,B): edges A->B, B->A and a uni-colored
///                    edge inside A;
///   config-ii        per chain triple (A,B,C): edges A->B, B->A, A->C, C->A.
inline RainbowConfigReport check_rainbow_configs(const Layout& l, const Rainbow& t,
                                                 const ChainPartition& c) {
  detail::validate_chain_partition(l, c);
  const auto& edges = l.edges();
  for (int id : t.edge_ids) {
    if (id < 0 || id >= static_cast<int>(edges.size())) {
      throw Error(ErrorKind::Input, "rainbow references an unknown edge");
    }
  }
  for (std::size_t i = 0; i + 1 < t.edge_ids.size(); i++) {
    if (!nests(edges[t.edge_ids[i]], edges[t.edge_ids[i + 1]])) {
      throw Error(ErrorKind::Input, "edges do not form a rainbow (outermost first)");
    }
  }

  RainbowConfigReport report;
  // bucket the rainbow's edges by (chain of left endpoint, chain of right endpoint)
  std::map<std::pair<int, int>, std::vector<int>> by_chain_pair;
  for (int id : t.edge_ids) {
    int cu = c.chain_of[edges[id].u], cv = c.chain_of[edges[id].v];
    by_chain_pair[{cu, cv}].push_back(id);
    if (cu == cv) report.uni_colored++;
    else report.bi_colored++;
  }

  auto endpoints_in_layout_order = [&](const std::vector<int>& ids) {
    std::vector<int> elems;
    for (int id : ids) {
      elems.push_back(edges[id].u);
      elems.push_back(edges[id].v);
    }
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return l.position(a) < l.position(b); });
    return elems;
  };

  for (const auto& [pair, ids] : by_chain_pair) {
    for (std::size_t i = 0; i < ids.size(); i++) {
      for (std::size_t j = i + 1; j < ids.size(); j++) {
        report.violations.push_back({PatternKind::TransitiveNest,
                                     endpoints_in_layout_order({ids[i], ids[j]}),
                                     {ids[i], ids[j]}});
      }
    }
  }

  auto bucket = [&](int a, int b) {
    auto it = by_chain_pair.find({a, b});
    return it == by_chain_pair.end() ? std::vector<int>{} : it->second;
  };

  for (const auto& [pair, uni_ids] : by_chain_pair) {
    if (pair.first != pair.second) continue;
    int a = pair.first;
    for (const auto& [other, ab_ids] : by_chain_pair) {
      if (other.first != a || other.second == a) continue;
      int b = other.second;
      for (int e_ab : ab_ids) {
        for (int e_ba : bucket(b, a)) {
          for (int e_aa : uni_ids) {
            report.violations.push_back({PatternKind::ConfigI,
                                         endpoints_in_layout_order({e_ab, e_ba, e_aa}),
                                         {e_ab, e_ba, e_aa}});
          }
        }
      }
    }
  }

  for (int a = 0; a < c.chain_count; a++) {
    for (int b = 0; b < c.chain_count; b++) {
      if (b == a) continue;
      for (int ch = b + 1; ch < c.chain_count; ch++) {
        if (ch == a) continue;
        for (int e1 : bucket(a, b)) {
          for (int e2 : bucket(b, a)) {
            for (int e3 : bucket(a, ch)) {
              for (int e4 : bucket(ch, a)) {
                report.violations.push_back({PatternKind::ConfigII,
                                             endpoints_in_layout_order({e1, e2, e3, e4}),
                                             {e1, e2, e3, e4}});
              }
            }
          }
        }
      }
    }
  }

  detail::sort_by_leftmost(report.violations, l);
  return report;
}

/// Rainbow numbers of both realizer-based layouts of a two-dimensional poset,
/// checked against the w(w+1)/2 queue bound and the classical w^2 bound.
struct BoundReport {
  int n = 0;
  int width = 0;
  int rainbow_l1 = 0;
  int rainbow_l2 = 0;
  int queue_bound = 0;   // w(w+1)/2
  int square_bound = 0;  // w^2
  bool within_queue_bound = false;   // min(r1, r2) <= w(w+1)/2
  bool each_within_queue_bound = false;
  bool within_square_bound = false;  // max(r1, r2) <= w^2
};

inline BoundReport realizer_bound_report(const RealizerPair& rp) {
  Poset p = Poset::from_realizers(rp);
  const auto& [l1, l2] = *p.realizers();
  BoundReport report;
  report.n = p.size();
  report.width = width(p).width;
  report.rainbow_l1 = rainbow_number(make_layout(p, l1)).k;
  report.rainbow_l2 = rainbow_number(make_layout(p, l2)).k;
  report.queue_bound = report.width * (report.width + 1) / 2;
  report.square_bound = report.width * report.width;
  report.within_queue_bound =
      std::min(report.rainbow_l1, report.rainbow_l2) <= report.queue_bound;
  report.each_within_queue_bound =
      std::max(report.rainbow_l1, report.rainbow_l2) <= report.queue_bound;
  report.within_square_bound =
      std::max(report.rainbow_l1, report.rainbow_l2) <= report.square_bound;
  return report;
}

}  // namespace qlay
