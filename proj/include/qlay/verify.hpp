#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "qlay/families.hpp"
#include "qlay/layout.hpp"
#include "qlay/poset.hpp"

namespace qlay {

struct ClaimCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ClaimReport {
  std::string claim;
  std::vector<ClaimCheck> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Deterministic random-2d test corpus: instance s (1-based) has
/// n = 2 + (s-1) mod (n_max-1) elements and seed s.
inline GeneratedFamily corpus_instance(int s, int n_max) {
  int n = 2 + (s - 1) % (n_max - 1);
  return gen_random_2d(n, static_cast<std::uint64_t>(s));
}

/// Five-element poset with linear extension (a1, b2, a, a2, b1) and chains
/// {a1, a, a2} / {b2, b1}; the one configuration the abaab checker must flag.
/// The order is a valid linear extension but of course not a realizer.
struct AbaabFixture {
  Poset poset;
  std::vector<int> order;
  ChainPartition chains;
};

inline AbaabFixture make_abaab_fixture() {
  std::vector<std::string> elements = {"a1", "b2", "a", "a2", "b1"};
  std::vector<std::pair<std::string, std::string>> relations = {
      {"a1", "a"}, {"a", "a2"}, {"b2", "b1"}, {"a1", "b1"}, {"b2", "a2"}};
  AbaabFixture fx{Poset::from_relations(elements, relations), {}, {}};
  for (int i = 0; i < 5; i++) fx.order.push_back(i);  // element list is already in layout order
  fx.chains.chain_of = {0, 1, 0, 0, 1};
  fx.chains.chain_count = 2;
  return fx;
}

namespace detail {

/// Seeded random linear extension: repeatedly picks one of the currently
/// minimal elements with splitmix64.
inline std::vector<int> random_linear_extension(const Poset& p, std::uint64_t seed) {
  int n = p.size();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::uint64_t state = seed;
  while (static_cast<int>(order.size()) < n) {
    std::vector<int> candidates;
    for (int e = 0; e < n; e++) {
      if (placed[e]) continue;
      bool minimal = true;
      p.below(e).for_each([&](int u) { minimal = minimal && placed[u]; });
      if (minimal) candidates.push_back(e);
    }
    int pick = static_cast<int>(splitmix64(state) % candidates.size());
    placed[candidates[pick]] = 1;
    order.push_back(candidates[pick]);
  }
  return order;
}

}  // namespace detail

/// Rainbow of the first-realizer layout of family R is exactly w(w+1)/2.
inline ClaimReport verify_lemma_rainbow(int w_max = 6) {
  ClaimReport report{"lemma-rainbow", {}};
  for (int w = 1; w <= w_max; w++) {
    Poset p = gen_r(w).to_poset();
    int k = rainbow_number(make_layout(p, p.realizers()->first)).k;
    int expected = w * (w + 1) / 2;
    std::ostringstream detail;
    detail << "w=" << w << " rainbow=" << k << " expected=" << expected;
    report.checks.push_back({"R_" + std::to_string(w), k == expected, detail.str()});
  }
  return report;
}

/// Every realizer layout of the random corpus stays within w(w+1)/2 queues
/// (and within the classical w^2 bound).
inline ClaimReport verify_thm2_bound(int n_max = 40, int seeds = 200) {
  ClaimReport report{"thm2-bound", {}};
  for (int s = 1; s <= seeds; s++) {
    GeneratedFamily fam = corpus_instance(s, n_max);
    BoundReport bounds = realizer_bound_report(fam.realizers);
    bool ok = bounds.each_within_queue_bound && bounds.within_square_bound;
    std::ostringstream detail;
    detail << "n=" << bounds.n << " w=" << bounds.width << " r1=" << bounds.rainbow_l1
           << " r2=" << bounds.rainbow_l2 << " bound=" << bounds.queue_bound;
    report.checks.push_back({"seed-" + std::to_string(s), ok, detail.str()});
  }
  return report;
}

/// Realizer layouts of the corpus show none of the three patterns; the
/// hand-built abaab instance is flagged exactly once.
inline ClaimReport verify_props(int n_max = 40, int seeds = 200) {
  ClaimReport report{"props", {}};
  for (int s = 1; s <= seeds; s++) {
    GeneratedFamily fam = corpus_instance(s, n_max);
    Poset p = fam.to_poset();
    ChainPartition chains = min_chain_partition(p);
    std::size_t v1 = check_patterns(make_layout(p, p.realizers()->first), chains).size();
    std::size_t v2 = check_patterns(make_layout(p, p.realizers()->second), chains).size();
    std::ostringstream detail;
    detail << "violations l1=" << v1 << " l2=" << v2;
    report.checks.push_back({"seed-" + std::to_string(s), v1 == 0 && v2 == 0, detail.str()});
  }
  AbaabFixture fx = make_abaab_fixture();
  auto violations = check_patterns(make_layout(fx.poset, fx.order), fx.chains);
  std::size_t abaab_hits = 0;
  for (const auto& v : violations) abaab_hits += v.kind == PatternKind::Abaab;
  std::ostringstream detail;
  detail << "abaab occurrences=" << abaab_hits << " expected=1";
  report.checks.push_back({"abaab-fixture", abaab_hits == 1, detail.str()});
  return report;
}

/// Family P is isomorphic to its dual with a and b as fixed points.
inline ClaimReport verify_pw_selfdual(int w_max = 4) {
  ClaimReport report{"pw-selfdual", {}};
  for (int w = 2; w <= w_max; w++) {
    GeneratedFamily fam = gen_p(w);
    Poset p = fam.to_poset();
    IsoOptions options;
    options.max_elements = std::max(60, p.size());
    if (w > 2) options.pins = {{"a", "a"}, {"b", "b"}};
    auto mapping = isomorphic(p, dual(p), options);
    std::ostringstream detail;
    detail << "n=" << p.size() << (mapping ? " isomorphism found" : " no isomorphism");
    if (mapping && w > 2) detail << ", fixed points a, b";
    report.checks.push_back({"P_" + std::to_string(w), mapping.has_value(), detail.str()});
  }
  return report;
}

/// Rainbow of any tested linear extension is at most w^2: both realizer
/// layouts plus three seeded random extensions per corpus instance.
inline ClaimReport verify_hp_square(int n_max = 40, int seeds = 200) {
  ClaimReport report{"hp-square", {}};
  for (int s = 1; s <= seeds; s++) {
    GeneratedFamily fam = corpus_instance(s, n_max);
    Poset p = fam.to_poset();
    int w = width(p).width;
    int worst = 0;
    for (const auto& order : {p.realizers()->first, p.realizers()->second}) {
      worst = std::max(worst, rainbow_number(make_layout(p, order)).k);
    }
    for (int extension = 0; extension < 3; extension++) {
      auto order = detail::random_linear_extension(p, 1000 * s + extension);
      worst = std::max(worst, rainbow_number(make_layout(p, order)).k);
    }
    std::ostringstream detail;
    detail << "n=" << p.size() << " w=" << w << " max rainbow=" << worst << " bound=" << w * w;
    report.checks.push_back({"seed-" + std::to_string(s), worst <= w * w, detail.str()});
  }
  return report;
}

}  // namespace qlay
