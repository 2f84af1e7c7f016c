#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlay/error.hpp"
#include "qlay/poset.hpp"

namespace qlay {

/// A generated two-dimensional poset together with its provenance: which
/// family, which parameters, and which elements form which building block.
struct GeneratedFamily {
  std::string family;  // "R" | "P" | "R-bidirectional" | "random-2d"
  int w = 0;
  int n = 0;
  std::uint64_t seed = 0;
  RealizerPair realizers;
  std::string name_scheme;
  /// Building blocks by tag, e.g. {"x", [x1..]}, {"r2", [r2/1..]}. Empty for
  /// families without internal structure.
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;

  Poset to_poset() const { return Poset::from_realizers(realizers); }
};

/// Concatenation of two disjoint sequences.
inline std::vector<std::string> concat(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::vector<std::string> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  std::vector<std::string> sorted = merged;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); i++) {
    if (sorted[i] == sorted[i + 1]) {
      throw Error(ErrorKind::DuplicateElement,
                  "sequences share element '" + sorted[i] + "'");
    }
  }
  return merged;
}

/// Alternating merge (a1, b1, a2, b2, ...) of two equal-length disjoint
/// sequences.
inline std::vector<std::string> interleave(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::Arity, "interleaving sequences of different lengths");
  }
  std::vector<std::string> out;
  out.reserve(2 * a.size());
  for (std::size_t i = 0; i < a.size(); i++) {
    out.push_back(a[i]);
    out.push_back(b[i]);
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); i++) {
    if (sorted[i] == sorted[i + 1]) {
      throw Error(ErrorKind::DuplicateElement,
                  "sequences share element '" + sorted[i] + "'");
    }
  }
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::vector<std::string> prefixed(const std::string& tag,
                                         const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& nm : names) out.push_back(tag + "/" + nm);
  return out;
}

inline std::vector<std::string> reversed(std::vector<std::string> s) {
  std::reverse(s.begin(), s.end());
  return s;
}

/// Realizers of the dual of a two-dimensional poset: reverse both lists and
/// swap their roles. (Reversing alone flips each total order; swapping keeps
/// the pair aligned with a 180-degree turn of the dominance drawing.)
inline RealizerPair dual_realizers(const RealizerPair& rp) {
  return {reversed(rp.l2), reversed(rp.l1)};
}

}  // namespace detail

/// Width-w family whose first-realizer layout carries a maximal
/// w(w+1)/2-rainbow. Elements are named "1".."w(w+1)"; level w adds elements
/// 1..w and n+w+1..n+2w around the re-indexed previous level.
inline GeneratedFamily gen_r(int w) {
  if (w < 1) throw Error(ErrorKind::Parameter, "family R needs w >= 1");
  // build the second realizer bottom-up over integer ids, then name them
  std::vector<int> l2 = {1, 2};
  for (int level = 2; level <= w; level++) {
    int n = static_cast<int>(l2.size());
    std::vector<int> next;
    next.reserve(n + 2 * level);
    for (int x : l2) next.push_back(x + level);
    for (int i = 1; i <= level; i++) {
      next.push_back(i);
      next.push_back(n + 2 * level - (i - 1));
    }
    l2 = std::move(next);
  }
  GeneratedFamily fam;
  fam.family = "R";
  fam.w = w;
  fam.n = w * (w + 1);
  for (int i = 1; i <= fam.n; i++) fam.realizers.l1.push_back(std::to_string(i));
  for (int x : l2) fam.realizers.l2.push_back(std::to_string(x));
  fam.name_scheme = "elements \"1\"..\"" + std::to_string(fam.n) +
                    "\" in first-realizer order";
  return fam;
}

/// Ordinal sum of the R family below a disjoint copy of its dual, realized so
/// that BOTH combined vertex orders contain the w(w+1)/2-rainbow: the second
/// block contributes the reverse of the other realizer to each list.
inline GeneratedFamily gen_r_bidirectional(int w) {
  if (w < 1) throw Error(ErrorKind::Parameter, "family R-bidirectional needs w >= 1");
  GeneratedFamily base = gen_r(w);
  auto copy_l1 = detail::prefixed("dual", base.realizers.l1);
  auto copy_l2 = detail::prefixed("dual", base.realizers.l2);
  GeneratedFamily fam;
  fam.family = "R-bidirectional";
  fam.w = w;
  fam.n = 2 * base.n;
  fam.realizers.l1 = concat(base.realizers.l1, detail::reversed(copy_l2));
  fam.realizers.l2 = concat(base.realizers.l2, detail::reversed(copy_l1));
  fam.name_scheme = "lower block named as family R; upper (dual) block prefixed \"dual/\"";
  fam.groups = {{"base", base.realizers.l1}, {"dual", detail::prefixed("dual", base.realizers.l1)}};
  return fam;
}

/// Self-dual width-w family with queue number at least 2(w-1). Level w splices
/// a copy of level w-1, a copy of the R family one size down, their duals, two
/// fences x1..x{r+1} / y1..y{r+1} and singletons a, b, s, t.
inline GeneratedFamily gen_p(int w) {
  if (w < 2) throw Error(ErrorKind::Parameter, "family P needs w >= 2");
  GeneratedFamily fam;
  fam.family = "P";
  fam.w = w;
  if (w == 2) {
    fam.realizers.l1 = {"1", "2", "3", "4"};
    fam.realizers.l2 = {"2", "1", "4", "3"};
    fam.n = 4;
    fam.name_scheme = "elements \"1\"..\"4\" in first-realizer order";
    return fam;
  }

  GeneratedFamily sub_p = gen_p(w - 1);
  GeneratedFamily sub_r = gen_r(w - 1);
  int r = sub_r.n;

  std::string ptag = "p" + std::to_string(w - 1);
  std::string rtag = "r" + std::to_string(w - 1);
  std::string dptag = "dualP" + std::to_string(w - 1);
  std::string drtag = "dualR" + std::to_string(w - 1);

  RealizerPair P{detail::prefixed(ptag, sub_p.realizers.l1),
                 detail::prefixed(ptag, sub_p.realizers.l2)};
  RealizerPair R{detail::prefixed(rtag, sub_r.realizers.l1),
                 detail::prefixed(rtag, sub_r.realizers.l2)};
  RealizerPair DP = detail::dual_realizers({detail::prefixed(dptag, sub_p.realizers.l1),
                                            detail::prefixed(dptag, sub_p.realizers.l2)});
  RealizerPair DR = detail::dual_realizers({detail::prefixed(drtag, sub_r.realizers.l1),
                                            detail::prefixed(drtag, sub_r.realizers.l2)});

  std::vector<std::string> xs, ys;
  for (int i = 1; i <= r + 1; i++) xs.push_back("x" + std::to_string(i));
  for (int i = 1; i <= r + 1; i++) ys.push_back("y" + std::to_string(i));
  std::vector<std::string> xs_head(xs.begin(), xs.end() - 1);
  std::vector<std::string> ys_tail(ys.begin() + 1, ys.end());

  auto& l1 = fam.realizers.l1;
  l1 = concat(xs, {"b", "s", ys[0]});
  l1 = concat(l1, interleave(R.l1, ys_tail));
  l1 = concat(l1, P.l1);
  l1 = concat(l1, {"a"});
  l1 = concat(l1, DP.l1);
  l1 = concat(l1, DR.l1);
  l1 = concat(l1, {"t"});

  auto& l2 = fam.realizers.l2;
  l2 = concat({"s"}, R.l2);
  l2 = concat(l2, P.l2);
  l2 = concat(l2, {"a"});
  l2 = concat(l2, DP.l2);
  l2 = concat(l2, interleave(xs_head, DR.l2));
  l2 = concat(l2, {xs[r], "t", "b"});
  l2 = concat(l2, ys);

  fam.n = static_cast<int>(l1.size());
  fam.name_scheme =
      "fresh elements x1..x" + std::to_string(r + 1) + ", y1..y" + std::to_string(r + 1) +
      ", a, b, s, t; building blocks prefixed \"" + ptag + "/\", \"" + rtag + "/\", \"" +
      dptag + "/\", \"" + drtag + "/\"";
  fam.groups = {{"x", xs},
                {"y", ys},
                {"singletons", {"a", "b", "s", "t"}},
                {ptag, P.l1},
                {rtag, R.l1},
                {dptag, detail::prefixed(dptag, sub_p.realizers.l1)},
                {drtag, detail::prefixed(drtag, sub_r.realizers.l1)}};
  return fam;
}

/// Random two-dimensional poset: first realizer is the identity over n fresh
/// elements, the second is a Fisher-Yates shuffle driven by splitmix64, so a
/// given (n, seed) reproduces bit-for-bit on any platform.
inline GeneratedFamily gen_random_2d(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::Parameter, "random family needs n >= 1");
  GeneratedFamily fam;
  fam.family = "random-2d";
  fam.n = n;
  fam.seed = seed;
  for (int i = 1; i <= n; i++) fam.realizers.l1.push_back(std::to_string(i));
  fam.realizers.l2 = fam.realizers.l1;
  std::uint64_t state = seed;
  for (int i = n - 1; i > 0; i--) {
    int j = static_cast<int>(detail::splitmix64(state) % static_cast<std::uint64_t>(i + 1));
    std::swap(fam.realizers.l2[i], fam.realizers.l2[j]);
  }
  fam.name_scheme = "elements \"1\"..\"" + std::to_string(n) + "\" in first-realizer order";
  return fam;
}

}  // namespace qlay
