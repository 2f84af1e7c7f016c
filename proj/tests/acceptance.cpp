// Acceptance suite: each criterion prints one PASS/FAIL line; the exit code is
// the number of failures. Criterion 7 uses an external DIMACS solver when one
// is available (QLAY_SOLVER, default "splr") and otherwise falls back to the
// bundled DPLL on the small instance plus structural checks on the large one.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlay/qlay.hpp"

using namespace qlay;

namespace {

int failures = 0;

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << (notes.str().empty() ? "" : "; ") << what;
    }
  }
};

void run(int number, const std::string& title, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto started = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (budget_seconds > 0) {
    c.require(elapsed < budget_seconds,
              "runtime " + std::to_string(elapsed) + "s over budget " +
                  std::to_string(budget_seconds) + "s");
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  ["
            << std::fixed << elapsed << "s]";
  if (!c.notes.str().empty()) std::cout << "  -- " << c.notes.str();
  std::cout << "\n";
  std::cout.unsetf(std::ios::fixed);
  if (!c.ok) failures++;
}

constexpr int kCorpusSeeds = 200;
constexpr int kCorpusMaxN = 40;

// ---- external solver plumbing ------------------------------------------------

std::string solver_binary() {
  const char* env = std::getenv("QLAY_SOLVER");
  return env && *env ? env : "splr";
}

int run_command(const std::string& command) {
  int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Runs `<solver> -q -r <model-file> <cnf-file>`; returns 10 (SAT), 20 (UNSAT)
/// or something else on failure.
int run_solver(const std::filesystem::path& cnf, const std::filesystem::path& model) {
  std::string cmd = solver_binary() + " -q -r " + model.string() + " " + cnf.string() +
                    " > /dev/null 2>&1";
  return run_command(cmd);
}

bool solver_available() {
  auto dir = std::filesystem::temp_directory_path();
  auto cnf = dir / "qlay_probe.cnf";
  auto model = dir / "qlay_probe.out";
  std::ofstream(cnf) << "p cnf 1 1\n1 0\n";
  int code = run_solver(cnf, model);
  std::filesystem::remove(cnf);
  std::filesystem::remove(model);
  return code == 10;
}

// ------------------------------------------------------------------------------

void criterion_1(Criterion& c) {
  std::vector<int> expected = {1, 3, 6, 10, 15, 21};
  for (int w = 1; w <= 6; w++) {
    Poset p = gen_r(w).to_poset();
    int k = rainbow_number(make_layout(p, p.realizers()->first)).k;
    c.require(k == expected[w - 1],
              "R_" + std::to_string(w) + " rainbow " + std::to_string(k));
  }
}

void criterion_2(Criterion& c) {
  int violations = 0;
  for (int s = 1; s <= kCorpusSeeds; s++) {
    BoundReport b = realizer_bound_report(corpus_instance(s, kCorpusMaxN).realizers);
    if (!b.each_within_queue_bound || !b.within_square_bound) violations++;
  }
  c.require(violations == 0, std::to_string(violations) + " bound violations");
}

void criterion_3(Criterion& c) {
  for (int s = 1; s <= kCorpusSeeds; s++) {
    Poset p = corpus_instance(s, kCorpusMaxN).to_poset();
    ChainPartition chains = min_chain_partition(p);
    for (const auto& order : {p.realizers()->first, p.realizers()->second}) {
      auto violations = check_patterns(make_layout(p, order), chains);
      c.require(violations.empty(), "pattern violation at seed " + std::to_string(s));
      if (!violations.empty()) return;
    }
  }
  AbaabFixture fx = make_abaab_fixture();
  auto violations = check_patterns(make_layout(fx.poset, fx.order), fx.chains);
  std::size_t abaab = 0;
  for (const auto& v : violations) abaab += v.kind == PatternKind::Abaab;
  c.require(abaab == 1, "abaab fixture flagged " + std::to_string(abaab) + " times");
}

void criterion_4(Criterion& c) {
  for (int s = 1; s <= kCorpusSeeds; s++) {
    Poset p = corpus_instance(s, kCorpusMaxN).to_poset();
    int w = width(p).width;
    ChainPartition chains = min_chain_partition(p);
    for (const auto& order : {p.realizers()->first, p.realizers()->second}) {
      Layout l = make_layout(p, order);
      auto report = check_rainbow_configs(l, rainbow_number(l).witness, chains);
      c.require(report.violations.empty(), "rainbow config at seed " + std::to_string(s));
      c.require(report.uni_colored <= w, "uni-colored > w at seed " + std::to_string(s));
      if (!c.ok) return;
    }
  }
}

void criterion_5(Criterion& c) {
  for (int w = 1; w <= 6; w++) {
    GeneratedFamily fam = gen_r(w);
    c.require(fam.n == w * (w + 1), "R size at w=" + std::to_string(w));
    c.require(width(fam.to_poset()).width == w, "R width at w=" + std::to_string(w));
  }
  c.require(gen_p(2).n == 4, "P_2 size");
  c.require(gen_p(3).n == 38, "P_3 size");
  c.require(gen_p(4).n == 130, "P_4 size");
  for (int w = 2; w <= 4; w++) {
    Poset p = gen_p(w).to_poset();
    c.require(width(p).width == w, "P width at w=" + std::to_string(w));
    IsoOptions options;
    options.max_elements = std::max(60, p.size());
    if (w > 2) options.pins = {{"a", "a"}, {"b", "b"}};
    auto mapping = isomorphic(p, dual(p), options);
    c.require(mapping.has_value(), "P_" + std::to_string(w) + " not self-dual");
    if (mapping) {
      c.require(oracle::iso_valid(p, dual(p), *mapping),
                "invalid isomorphism at w=" + std::to_string(w));
      if (w > 2) {
        c.require((*mapping)[p.index_of("a")] == p.index_of("a") &&
                      (*mapping)[p.index_of("b")] == p.index_of("b"),
                  "a/b not fixed at w=" + std::to_string(w));
      }
    }
  }
}

void criterion_6(Criterion& c) {
  Poset chain = Poset::from_realizers({{"1", "2", "3", "4"}, {"1", "2", "3", "4"}});
  c.require(exact_qn_bnb(chain).qn == 1, "qn(chain)");
  Poset anti = Poset::from_relations({"1", "2", "3"}, {});
  c.require(exact_qn_bnb(anti).qn == 0, "qn(antichain)");
  c.require(exact_qn_bnb(gen_p(2).to_poset()).qn == 2, "qn(P_2)");
  c.require(exact_qn_bnb(gen_r(2).to_poset()).qn == 1, "qn(R_2)");
  for (int s = 1; s <= 100; s++) {
    Poset p = gen_random_2d(2 + (s - 1) % 7, s).to_poset();
    if (exact_qn_bnb(p).qn != brute_force_qn(p).qn) {
      c.require(false, "bnb/brute mismatch at seed " + std::to_string(s));
      return;
    }
  }
}

void criterion_7(Criterion& c) {
  Poset p3 = gen_p(3).to_poset();
  if (solver_available()) {
    c.notes << "[external solver: " << solver_binary() << "] ";
    auto dir = std::filesystem::temp_directory_path() / "qlay-acceptance";
    std::filesystem::create_directories(dir);

    auto cnf4_path = dir / "acceptance_p3_k4.cnf";
    auto model4_path = dir / "acceptance_p3_k4.model";
    CnfInstance cnf4 = encode_cnf(p3, 4);
    std::ofstream(cnf4_path) << dimacs_string(cnf4);
    int code4 = run_solver(cnf4_path, model4_path);
    c.require(code4 == 10, "k=4 expected SAT, solver exit " + std::to_string(code4));
    if (code4 == 10) {
      std::ifstream model_file(model4_path);
      ModelText model = parse_model_text(model_file);
      DecodedLayout decoded = decode_model(cnf4, p3, model.literals);
      Layout layout = make_layout(p3, decoded.order);
      c.require(decoded.assignment.k <= 4, "decoded assignment uses > 4 queues");
      c.require(rainbow_number(layout).k <= 4, "decoded layout rainbow > 4");
      c.require(oracle::queue_assignment_valid(layout, decoded.assignment),
                "decoded assignment invalid");
    }

    auto cnf3_path = dir / "acceptance_p3_k3.cnf";
    auto model3_path = dir / "acceptance_p3_k3.model";
    std::ofstream(cnf3_path) << dimacs_string(encode_cnf(p3, 3));
    int code3 = run_solver(cnf3_path, model3_path);
    c.require(code3 == 20, "k=3 expected UNSAT, solver exit " + std::to_string(code3));
    return;
  }

  c.notes << "[fallback: bundled DPLL + structural checks] ";
  Poset p2 = gen_p(2).to_poset();
  CnfInstance sat2 = encode_cnf(p2, 2);
  c.require(solve_dpll(sat2.var_count(), sat2.clauses).has_value(), "P_2 k=2 not SAT");
  CnfInstance unsat1 = encode_cnf(p2, 1);
  c.require(!solve_dpll(unsat1.var_count(), unsat1.clauses).has_value(), "P_2 k=1 not UNSAT");

  for (int k : {3, 4}) {
    CnfInstance cnf = encode_cnf(p3, k);
    int n = p3.size();
    auto m = cover_graph(p3).edges.size();
    std::size_t disjoint = 0;
    auto edges = cover_graph(p3).edges;
    for (std::size_t e = 0; e < edges.size(); e++) {
      for (std::size_t f = e + 1; f < edges.size(); f++) {
        auto [a, b] = edges[e];
        auto [x, y] = edges[f];
        if (a != x && a != y && b != x && b != y) disjoint++;
      }
    }
    c.require(cnf.var_count() == n * (n - 1) / 2 + static_cast<int>(m) * k, "P_3 var count");
    c.require(cnf.counts.units == static_cast<std::size_t>(p3.relation_count()),
              "P_3 unit clauses");
    c.require(cnf.counts.transitivity ==
                  2 * static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6,
              "P_3 transitivity clauses");
    c.require(cnf.counts.at_least_one == m, "P_3 at-least-one clauses");
    c.require(cnf.counts.nesting == disjoint * 2 * k, "P_3 nesting clauses");
  }
}

void criterion_8(Criterion& c) {
  for (int w = 1; w <= 5; w++) {
    Poset p = gen_r_bidirectional(w).to_poset();
    int bound = w * (w + 1) / 2;
    int r1 = rainbow_number(make_layout(p, p.realizers()->first)).k;
    int r2 = rainbow_number(make_layout(p, p.realizers()->second)).k;
    c.require(r1 >= bound && r2 >= bound,
              "w=" + std::to_string(w) + " rainbows " + std::to_string(r1) + "/" +
                  std::to_string(r2) + " below " + std::to_string(bound));
  }
}

void criterion_9(Criterion& c) {
  std::vector<Poset> posets;
  for (int s = 1; s <= kCorpusSeeds; s++) posets.push_back(corpus_instance(s, kCorpusMaxN).to_poset());
  for (int w = 1; w <= 6; w++) posets.push_back(gen_r(w).to_poset());
  for (int w = 1; w <= 5; w++) posets.push_back(gen_r_bidirectional(w).to_poset());
  for (int w = 2; w <= 4; w++) posets.push_back(gen_p(w).to_poset());
  for (std::size_t i = 0; i < posets.size(); i++) {
    const Poset& p = posets[i];
    for (const auto& order : {p.realizers()->first, p.realizers()->second}) {
      Layout l = make_layout(p, order);
      auto qa = queue_assignment(l);
      if (qa.k != rainbow_number(l).k || !oracle::queue_assignment_valid(l, qa)) {
        c.require(false, "certificate failure on corpus layout " + std::to_string(i));
        return;
      }
    }
  }
}

}  // namespace

int main() {
  std::cout << "acceptance suite (corpus: " << kCorpusSeeds << " random 2d posets, n <= "
            << kCorpusMaxN << ")\n";
  run(1, "maximal rainbow of family R at w = 1..6", 1.0, criterion_1);
  run(2, "realizer layouts within w(w+1)/2 and w^2 on the corpus", 10.0, criterion_2);
  run(3, "pattern checks silent on corpus, abaab fixture flagged once", 0, criterion_3);
  run(4, "maximum rainbows free of forbidden configurations", 0, criterion_4);
  run(5, "construction sizes, widths and self-duality", 0, criterion_5);
  run(6, "exact solver agrees with brute force", 60.0, criterion_6);
  run(7, "P_3 needs exactly 4 queues (CNF)", 0, criterion_7);
  run(8, "bidirectional family: both layouts reach w(w+1)/2", 0, criterion_8);
  run(9, "queue assignments certify the rainbow number", 0, criterion_9);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures;
}
