#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qlay/bits.hpp"
#include "qlay/error.hpp"

namespace qlay {

/// Two permutations of one element set; the poset they describe is their
/// pairwise intersection (u < v iff u precedes v in both lists).
struct RealizerPair {
  std::vector<std::string> l1;
  std::vector<std::string> l2;
};

/// Throws MalformedRealizer unless l1 and l2 are permutations of the same
/// non-empty element set with no duplicates.
inline void validate_realizers(const RealizerPair& rp) {
  if (rp.l1.empty()) throw Error(ErrorKind::EmptyInput, "realizer lists are empty");
  if (rp.l1.size() != rp.l2.size()) {
    throw Error(ErrorKind::MalformedRealizer, "realizer lists have different lengths");
  }
  std::vector<std::string> a = rp.l1, b = rp.l2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i + 1 < a.size(); i++) {
    if (a[i] == a[i + 1]) {
      throw Error(ErrorKind::MalformedRealizer, "duplicate element '" + a[i] + "' in realizer");
    }
  }
  if (a != b) {
    throw Error(ErrorKind::MalformedRealizer, "realizer lists are over different element sets");
  }
}

/// Finite strict partial order. Elements are opaque names; internally they are
/// dense indices in elements-list order, and the relation is kept in
/// transitive-closure form as one successor bitset and one predecessor bitset
/// per element. All instances are immutable once built.
class Poset {
 public:
  /// Builds the two-dimensional poset realized by the pair: u < v iff u
  /// precedes v in both lists. The elements list is l1's order, and the pair
  /// is remembered (dominance drawings and solver warm starts use it).
  static Poset from_realizers(const RealizerPair& rp) {
    validate_realizers(rp);
    Poset p;
    p.init_elements(rp.l1);
    int n = p.size();
    std::vector<int> pos2(n);
    for (int i = 0; i < n; i++) pos2[p.index_of(rp.l2[i])] = i;
    // indices follow l1, so u < v holds iff u < v as indices and u precedes v in l2
    for (int u = 0; u < n; u++) {
      for (int v = u + 1; v < n; v++) {
        if (pos2[u] < pos2[v]) {
          p.above_[u].set(v);
          p.below_[v].set(u);
        }
      }
    }
    std::vector<int> l2idx(n);
    for (int i = 0; i < n; i++) l2idx[i] = p.index_of(rp.l2[i]);
    std::vector<int> l1idx(n);
    for (int i = 0; i < n; i++) l1idx[i] = i;
    p.realizers_ = std::make_pair(std::move(l1idx), std::move(l2idx));
    return p;
  }

  /// Builds a poset as the transitive closure of an explicit relation list.
  /// Rejects cyclic inputs, reporting one cycle in the message.
  static Poset from_relations(const std::vector<std::string>& elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    Poset p;
    p.init_elements(elements);
    int n = p.size();
    std::vector<std::vector<int>> succ(n);
    for (const auto& [u, v] : pairs) {
      int ui = p.index_of(u), vi = p.index_of(v);
      if (ui == vi) throw Error(ErrorKind::NotAPoset, "reflexive pair (" + u + ", " + u + ")");
      succ[ui].push_back(vi);
    }
    // Closure in reverse topological order; a leftover node means a cycle.
    std::vector<int> indeg(n, 0), topo;
    for (int u = 0; u < n; u++)
      for (int v : succ[u]) indeg[v]++;
    std::vector<int> stack;
    for (int u = 0; u < n; u++)
      if (indeg[u] == 0) stack.push_back(u);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      topo.push_back(u);
      for (int v : succ[u])
        if (--indeg[v] == 0) stack.push_back(v);
    }
    if (static_cast<int>(topo.size()) != n) {
      throw Error(ErrorKind::NotAPoset, "relation contains a cycle: " + p.find_cycle(succ));
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      int u = *it;
      for (int v : succ[u]) {
        p.above_[u].set(v);
        p.above_[u].or_with(p.above_[v]);
      }
    }
    for (int u = 0; u < n; u++) {
      if (p.above_[u].test(u)) throw Error(ErrorKind::NotAPoset, "closure is reflexive");  // unreachable
      p.above_[u].for_each([&](int v) { p.below_[v].set(u); });
    }
    return p;
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_[i]; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::Input, "unknown element '" + name + "'");
    return it->second;
  }

  bool less(int u, int v) const { return above_[u].test(v); }
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
  bool incomparable(int u, int v) const { return u != v && !comparable(u, v); }

  const detail::Bits& above(int u) const { return above_[u]; }
  const detail::Bits& below(int u) const { return below_[u]; }

  /// Number of ordered pairs in the closure.
  int relation_count() const {
    int total = 0;
    for (int u = 0; u < size(); u++) total += above_[u].count();
    return total;
  }

  /// Realizer permutations as element indices, when the poset was built from
  /// (or propagated through) a realizer pair.
  const std::optional<std::pair<std::vector<int>, std::vector<int>>>& realizers() const {
    return realizers_;
  }

  RealizerPair realizer_names() const {
    if (!realizers_) throw Error(ErrorKind::Input, "poset carries no realizers");
    RealizerPair rp;
    for (int i : realizers_->first) rp.l1.push_back(elements_[i]);
    for (int i : realizers_->second) rp.l2.push_back(elements_[i]);
    return rp;
  }

  /// Same elements in the same order, relation reversed. Involution. A carried
  /// realizer pair (l1, l2) becomes (reverse l2, reverse l1).
  friend Poset dual(const Poset& p) {
    Poset d;
    d.elements_ = p.elements_;
    d.index_ = p.index_;
    d.above_ = p.below_;
    d.below_ = p.above_;
    if (p.realizers_) {
      auto [l1, l2] = *p.realizers_;
      std::reverse(l1.begin(), l1.end());
      std::reverse(l2.begin(), l2.end());
      d.realizers_ = std::make_pair(l2, l1);
    }
    return d;
  }

  /// Equality of the order itself (element list and relation); realizer
  /// metadata is not compared.
  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && above_ == other.above_;
  }

 private:
  void init_elements(const std::vector<std::string>& elements) {
    if (elements.empty()) throw Error(ErrorKind::EmptyInput, "poset has no elements");
    elements_ = elements;
    for (int i = 0; i < static_cast<int>(elements.size()); i++) {
      if (!index_.emplace(elements[i], i).second) {
        throw Error(ErrorKind::DuplicateElement, "duplicate element '" + elements[i] + "'");
      }
    }
    above_.assign(elements.size(), detail::Bits(size()));
    below_.assign(elements.size(), detail::Bits(size()));
  }

  std::string find_cycle(const std::vector<std::vector<int>>& succ) const {
    int n = size();
    std::vector<int> state(n, 0), parent(n, -1);  // 0 fresh, 1 on stack, 2 done
    for (int s = 0; s < n; s++) {
      if (state[s] != 0) continue;
      std::vector<std::pair<int, std::size_t>> frames{{s, 0}};
      state[s] = 1;
      while (!frames.empty()) {
        auto& [u, next] = frames.back();
        if (next == succ[u].size()) {
          state[u] = 2;
          frames.pop_back();
          continue;
        }
        int v = succ[u][next++];
        if (state[v] == 1) {
          std::vector<int> path;
          for (const auto& fr : frames) path.push_back(fr.first);
          auto start = std::find(path.begin(), path.end(), v);
          std::string out;
          for (auto it = start; it != path.end(); ++it) out += elements_[*it] + " < ";
          return out + elements_[v];
        }
        if (state[v] == 0) {
          state[v] = 1;
          frames.push_back({v, 0});
        }
      }
    }
    return "(cycle not located)";
  }

  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<detail::Bits> above_;
  std::vector<detail::Bits> below_;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> realizers_;
};

/// Cover relation u ≺ v: u < v with no witness u < c < v. Edges are sorted by
/// (index of u, index of v) so downstream output is reproducible.
struct CoverGraph {
  std::vector<std::pair<int, int>> edges;
};

inline CoverGraph cover_graph(const Poset& p) {
  CoverGraph g;
  int n = p.size();
  for (int u = 0; u < n; u++) {
    for (int v = 0; v < n; v++) {
      if (p.less(u, v) && !p.above(u).intersects(p.below(v))) {
        g.edges.emplace_back(u, v);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Partition of the elements into chains (pairwise comparable classes).
/// chain_of[e] is the 0-based chain index of element e.
struct ChainPartition {
  std::vector<int> chain_of;
  int chain_count = 0;
};

struct WidthResult {
  int width = 0;
  std::vector<int> antichain;  // witness, element indices in increasing order
};

namespace detail {

/// Maximum bipartite matching on the split graph of the closure: left copy of
/// u connects to right copy of v iff u < v. Kuhn's augmenting paths.
struct ClosureMatching {
  std::vector<int> match_to;    // element -> its chain successor, -1 at chain top
  std::vector<int> match_from;  // element -> its chain predecessor, -1 at chain bottom
  int size = 0;
};

inline ClosureMatching max_closure_matching(const Poset& p) {
  int n = p.size();
  ClosureMatching m;
  m.match_to.assign(n, -1);
  m.match_from.assign(n, -1);
  std::vector<char> seen(n);
  auto augment = [&](auto&& self, int u) -> bool {
    bool found = false;
    p.above(u).for_each([&](int v) {
      if (found || seen[v]) return;
      seen[v] = 1;
      if (m.match_from[v] == -1 || self(self, m.match_from[v])) {
        m.match_from[v] = u;
        m.match_to[u] = v;
        found = true;
      }
    });
    return found;
  };
  for (int u = 0; u < n; u++) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(augment, u)) m.size++;
  }
  return m;
}

}  // namespace detail

/// Minimum chain cover of the poset; by Dilworth its size equals the width.
/// Chains follow the matching, numbered in the order of their bottom elements.
inline ChainPartition min_chain_partition(const Poset& p) {
  auto m = detail::max_closure_matching(p);
  ChainPartition cp;
  cp.chain_of.assign(p.size(), -1);
  for (int u = 0; u < p.size(); u++) {
    if (m.match_from[u] != -1) continue;  // not a chain bottom
    for (int v = u; v != -1; v = m.match_to[v]) cp.chain_of[v] = cp.chain_count;
    cp.chain_count++;
  }
  return cp;
}

/// Width with a maximum-antichain witness. The antichain is extracted from the
/// same matching via König's construction, so the two certificates agree by
/// construction.
inline WidthResult width(const Poset& p) {
  int n = p.size();
  auto m = detail::max_closure_matching(p);
  // Alternating reachability from unmatched left copies.
  std::vector<char> left_z(n, 0), right_z(n, 0);
  std::vector<int> queue;
  for (int u = 0; u < n; u++) {
    if (m.match_to[u] == -1) {
      left_z[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    p.above(u).for_each([&](int v) {
      if (right_z[v]) return;
      right_z[v] = 1;
      int w = m.match_from[v];
      if (w != -1 && !left_z[w]) {
        left_z[w] = 1;
        queue.push_back(w);
      }
    });
  }
  WidthResult r;
  r.width = n - m.size;
  for (int x = 0; x < n; x++) {
    if (left_z[x] && !right_z[x]) r.antichain.push_back(x);
  }
  return r;
}

/// True iff the order lists every element once and positions respect the
/// relation. `order` holds element indices in layout order.
inline bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  int n = p.size();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::MalformedOrder, "order has wrong length");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; i++) {
    int e = order[i];
    if (e < 0 || e >= n || pos[e] != -1) {
      throw Error(ErrorKind::MalformedOrder, "order is not a permutation of the elements");
    }
    pos[e] = i;
  }
  for (int u = 0; u < n; u++) {
    bool ok = true;
    p.above(u).for_each([&](int v) { ok = ok && pos[u] < pos[v]; });
    if (!ok) return false;
  }
  return true;
}

/// Converts a name sequence into an index order, validating the permutation.
inline std::vector<int> order_from_names(const Poset& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.size()) {
    throw Error(ErrorKind::MalformedOrder, "order has wrong length");
  }
  std::vector<int> order;
  order.reserve(names.size());
  for (const auto& nm : names) order.push_back(p.index_of(nm));
  return order;
}

struct IsoOptions {
  int max_elements = 60;
  std::uint64_t node_limit = 5'000'000;
  /// Pre-pinned assignments (name in p -> name in q).
  std::vector<std::pair<std::string, std::string>> pins;
};

namespace detail {

/// Iterated relational refinement: elements get colors, colors are refined by
/// the multisets of neighbor colors below and above until stable. Classes are
/// computed jointly over both posets so equal colors are directly comparable.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  auto cov_p = cover_graph(p);
  auto cov_q = cover_graph(q);
  std::vector<int> cin_p(np, 0), cout_p(np, 0), cin_q(nq, 0), cout_q(nq, 0);
  for (auto [u, v] : cov_p.edges) cout_p[u]++, cin_p[v]++;
  for (auto [u, v] : cov_q.edges) cout_q[u]++, cin_q[v]++;

  std::vector<int> cp(np), cq(nq);
  {
    std::map<std::tuple<int, int, int, int>, int> ids;
    auto id_of = [&](int below, int above, int cin, int cout) {
      auto key = std::make_tuple(below, above, cin, cout);
      auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
      (void)fresh;
      return it->second;
    };
    for (int u = 0; u < np; u++)
      cp[u] = id_of(p.below(u).count(), p.above(u).count(), cin_p[u], cout_p[u]);
    for (int u = 0; u < nq; u++)
      cq[u] = id_of(q.below(u).count(), q.above(u).count(), cin_q[u], cout_q[u]);
  }

  for (int round = 0; round < np + 1; round++) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    auto signature = [&](const Poset& ps, const std::vector<int>& colors, int u) {
      std::vector<int> lo, hi;
      ps.below(u).for_each([&](int v) { lo.push_back(colors[v]); });
      ps.above(u).for_each([&](int v) { hi.push_back(colors[v]); });
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      return std::make_tuple(colors[u], std::move(lo), std::move(hi));
    };
    std::vector<int> np_colors(np), nq_colors(nq);
    for (int u = 0; u < np; u++) {
      auto [it, fresh] = ids.emplace(signature(p, cp, u), static_cast<int>(ids.size()));
      (void)fresh;
      np_colors[u] = it->second;
    }
    for (int u = 0; u < nq; u++) {
      auto [it, fresh] = ids.emplace(signature(q, cq, u), static_cast<int>(ids.size()));
      (void)fresh;
      nq_colors[u] = it->second;
    }
    bool stable = np_colors == cp && nq_colors == cq;
    cp = std::move(np_colors);
    cq = std::move(nq_colors);
    if (stable) break;
  }
  return {cp, cq};
}

}  // namespace detail

/// Searches for a relation-preserving bijection from p onto q. Returns the
/// mapping (p index -> q index) or nullopt. Exact backtracking with full
/// candidate propagation; fine for a few hundred structured elements but
/// guarded by max_elements because adversarial inputs are exponential.
inline std::optional<std::vector<int>> isomorphic(const Poset& p, const Poset& q,
                                                  const IsoOptions& options = {}) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() > options.max_elements) {
    throw Error(ErrorKind::ResourceLimit,
                "isomorphism search guarded at " + std::to_string(options.max_elements) +
                    " elements (got " + std::to_string(p.size()) + "); raise max_elements");
  }
  int n = p.size();
  if (p.relation_count() != q.relation_count()) return std::nullopt;

  auto [cp, cq] = detail::refine_colors(p, q);
  {
    std::map<int, int> count_p, count_q;
    for (int c : cp) count_p[c]++;
    for (int c : cq) count_q[c]++;
    if (count_p != count_q) return std::nullopt;
  }

  std::vector<detail::Bits> candidates(n, detail::Bits(n));
  for (int u = 0; u < n; u++) {
    for (int v = 0; v < n; v++) {
      if (cp[u] == cq[v]) candidates[u].set(v);
    }
  }
  for (const auto& [pu, qv] : options.pins) {
    int u = p.index_of(pu), v = q.index_of(qv);
    if (!candidates[u].test(v)) return std::nullopt;
    candidates[u] = detail::Bits(n);
    candidates[u].set(v);
  }

  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t nodes = 0;

  auto search = [&](auto&& self) -> bool {
    int best = -1, best_count = n + 1;
    for (int u = 0; u < n; u++) {
      if (mapping[u] != -1) continue;
      int c = candidates[u].count();
      if (c < best_count) {
        best = u;
        best_count = c;
      }
    }
    if (best == -1) return true;
    if (best_count == 0) return false;
    int u = best;
    bool found = false;
    candidates[u].for_each([&](int v) {
      if (found || used[v]) return;
      if (++nodes > options.node_limit) {
        throw Error(ErrorKind::ResourceLimit, "isomorphism search exceeded its node limit");
      }
      // prune every open element against the tentative pair (u -> v)
      std::vector<std::pair<int, detail::Bits>> saved;
      bool feasible = true;
      for (int z = 0; z < n && feasible; z++) {
        if (mapping[z] != -1 || z == u) continue;
        detail::Bits pruned(n);
        bool changed = false, any = false;
        candidates[z].for_each([&](int y) {
          if (y == v || used[y]) {
            changed = true;
            return;
          }
          bool ok = p.less(z, u) == q.less(y, v) && p.less(u, z) == q.less(v, y);
          if (ok) {
            pruned.set(y);
            any = true;
          } else {
            changed = true;
          }
        });
        if (!any) feasible = false;
        if (changed) {
          saved.emplace_back(z, candidates[z]);
          candidates[z] = std::move(pruned);
        }
      }
      if (feasible) {
        mapping[u] = v;
        used[v] = 1;
        if (self(self)) {
          found = true;
        } else {
          mapping[u] = -1;
          used[v] = 0;
        }
      }
      if (!found) {
        for (auto& [z, bits] : saved) candidates[z] = std::move(bits);
      }
    });
    return found;
  };

  if (!search(search)) return std::nullopt;
  return mapping;
}

}  // namespace qlay
