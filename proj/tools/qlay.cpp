// qlay: generate, analyze, draw and solve queue layouts of 2-dimensional posets.
//
// Exit codes: 0 success / all checks pass, 2 usage or bad input, 3 resource
// limit hit (best incumbent is still printed), 4 invalid solver model,
// 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlay/qlay.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw qlay::Error(qlay::ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qlay::Error(qlay::ErrorKind::Usage, "cannot write '" + path + "'");
  out << content;
}

std::vector<std::string> names_of(const qlay::Poset& p, const std::vector<int>& order) {
  std::vector<std::string> names;
  for (int e : order) names.push_back(p.name(e));
  return names;
}

std::string join(const std::vector<std::string>& names, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); i++) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

int run_gen(const std::string& family, int w, int n, std::uint64_t seed,
            const std::string& out_path) {
  qlay::GeneratedFamily fam;
  if (family == "r") fam = qlay::gen_r(w);
  else if (family == "p") fam = qlay::gen_p(w);
  else if (family == "rbid") fam = qlay::gen_r_bidirectional(w);
  else if (family == "random2d") fam = qlay::gen_random_2d(n, seed);
  else throw qlay::Error(qlay::ErrorKind::Usage, "unknown family '" + family + "'");

  qlay::PosetDocument doc = qlay::document_from_family(fam);
  write_output(out_path, qlay::serialize_document(doc));
  std::ostream& info = (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
  info << "elements: " << fam.n << "\n";
  info << "width: " << qlay::width(fam.to_poset()).width << "\n";
  return 0;
}

int run_analyze(const std::string& input, bool as_json) {
  qlay::PosetDocument doc = qlay::parse_document(read_input(input));
  qlay::Poset p = qlay::to_poset(doc);
  auto covers = qlay::cover_graph(p);
  auto w = qlay::width(p);
  auto chains = qlay::min_chain_partition(p);

  ordered_json j;
  j["n"] = p.size();
  j["m"] = covers.edges.size();
  j["width"] = w.width;
  j["antichain"] = names_of(p, w.antichain);
  {
    std::vector<std::vector<int>> chain_members(chains.chain_count);
    for (int e = 0; e < p.size(); e++) chain_members[chains.chain_of[e]].push_back(e);
    std::vector<std::vector<std::string>> named(chains.chain_count);
    for (int ch = 0; ch < chains.chain_count; ch++) {
      auto& members = chain_members[ch];
      std::sort(members.begin(), members.end(), [&](int u, int v) { return p.less(u, v); });
      for (int e : members) named[ch].push_back(p.name(e));
    }
    j["chains"] = named;
  }
  if (doc.realizers) {
    auto bounds = qlay::realizer_bound_report(*doc.realizers);
    ordered_json r;
    r["rainbow_l1"] = bounds.rainbow_l1;
    r["rainbow_l2"] = bounds.rainbow_l2;
    r["queue_bound"] = bounds.queue_bound;
    r["square_bound"] = bounds.square_bound;
    r["within_queue_bound"] = bounds.within_queue_bound;
    r["within_square_bound"] = bounds.within_square_bound;
    r["queue_bound_tight"] =
        std::max(bounds.rainbow_l1, bounds.rainbow_l2) == bounds.queue_bound;
    j["realizer_bounds"] = r;
  }

  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "elements: " << p.size() << "\n";
  std::cout << "cover edges: " << covers.edges.size() << "\n";
  std::cout << "width: " << w.width << "  antichain: " << join(names_of(p, w.antichain)) << "\n";
  std::cout << "chains (" << chains.chain_count << "):\n";
  for (const auto& members : j["chains"]) {
    std::cout << "  " << join(members.get<std::vector<std::string>>(), " < ") << "\n";
  }
  if (doc.realizers) {
    const auto& r = j["realizer_bounds"];
    std::cout << "realizer rainbows: l1=" << r["rainbow_l1"] << " l2=" << r["rainbow_l2"] << "\n";
    std::cout << "queue bound w(w+1)/2 = " << r["queue_bound"] << ": "
              << (r["within_queue_bound"].get<bool>() ? "holds" : "VIOLATED")
              << (r["queue_bound_tight"].get<bool>() ? " (tight)" : "") << "\n";
    std::cout << "square bound w^2 = " << r["square_bound"] << ": "
              << (r["within_square_bound"].get<bool>() ? "holds" : "VIOLATED") << "\n";
  }
  return 0;
}

void print_assignment(const qlay::Poset& p, const qlay::Layout& layout,
                      const qlay::QueueAssignment& qa) {
  for (std::size_t e = 0; e < layout.edges().size(); e++) {
    const auto& edge = layout.edges()[e];
    std::cout << "  (" << p.name(edge.u) << ", " << p.name(edge.v) << ") -> queue "
              << qa.queue_of[e] << "\n";
  }
}

int run_qn(const std::string& input, const std::string& mode, int k,
           const std::string& model_path, const std::string& out_path,
           std::uint64_t node_limit, bool as_json) {
  qlay::PosetDocument doc = qlay::parse_document(read_input(input));
  qlay::Poset p = qlay::to_poset(doc);

  if (mode == "bnb") {
    qlay::BnbOptions options;
    options.node_limit = node_limit;
    qlay::SolveResult result;
    bool limited = false;
    try {
      result = qlay::exact_qn_bnb(p, options);
    } catch (const qlay::ResourceLimitError& e) {
      std::cerr << "error: " << e.what() << " (incumbent below is an upper bound)\n";
      result = e.incumbent();
      limited = true;
    }
    if (as_json) {
      ordered_json j;
      j["qn"] = result.qn;
      j["optimal"] = result.optimal;
      j["order"] = names_of(p, result.witness_order);
      j["queues"] = result.witness_assignment.queue_of;
      j["nodes"] = result.stats.nodes;
      j["seconds"] = result.stats.seconds;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "qn = " << result.qn << (result.optimal ? "" : " (upper bound, search cut off)")
                << "\n";
      std::cout << "order: " << join(names_of(p, result.witness_order)) << "\n";
      print_assignment(p, qlay::make_layout(p, result.witness_order), result.witness_assignment);
    }
    return limited ? 3 : 0;
  }

  if (mode != "cnf") throw qlay::Error(qlay::ErrorKind::Usage, "mode must be bnb or cnf");
  if (k < 1) throw qlay::Error(qlay::ErrorKind::Usage, "--mode cnf requires --k");
  qlay::CnfInstance cnf = qlay::encode_cnf(p, k);

  if (model_path.empty()) {
    write_output(out_path, qlay::dimacs_string(cnf));
    std::cerr << "wrote CNF: " << cnf.var_count() << " vars, " << cnf.clauses.size()
              << " clauses (satisfiable iff a " << k << "-queue layout exists)\n";
    return 0;
  }

  std::ifstream model_file(model_path);
  if (!model_file) throw qlay::Error(qlay::ErrorKind::Usage, "cannot open '" + model_path + "'");
  qlay::ModelText model = qlay::parse_model_text(model_file);
  if (model.unsat) {
    std::cout << "solver reported UNSAT: no " << k << "-queue layout exists\n";
    return 0;
  }
  if (model.literals.empty()) {
    throw qlay::Error(qlay::ErrorKind::InvalidModel, "model file contains no literals");
  }
  qlay::DecodedLayout decoded = qlay::decode_model(cnf, p, model.literals);
  qlay::Layout layout = qlay::make_layout(p, decoded.order);
  if (as_json) {
    ordered_json j;
    j["k"] = decoded.assignment.k;
    j["order"] = names_of(p, decoded.order);
    j["queues"] = decoded.assignment.queue_of;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "validated " << decoded.assignment.k << "-queue layout (budget " << k << ")\n";
    std::cout << "order: " << join(names_of(p, decoded.order)) << "\n";
    print_assignment(p, layout, decoded.assignment);
  }
  return 0;
}

int run_verify(const std::string& claim, int w_max, int n_max, int seeds, bool as_json) {
  qlay::ClaimReport report;
  if (claim == "lemma-rainbow") report = qlay::verify_lemma_rainbow(w_max > 0 ? w_max : 6);
  else if (claim == "thm2-bound") report = qlay::verify_thm2_bound(n_max, seeds);
  else if (claim == "props") report = qlay::verify_props(n_max, seeds);
  else if (claim == "pw-selfdual") report = qlay::verify_pw_selfdual(w_max > 0 ? w_max : 4);
  else if (claim == "hp-square") report = qlay::verify_hp_square(n_max, seeds);
  else throw qlay::Error(qlay::ErrorKind::Usage, "unknown claim '" + claim + "'");

  if (as_json) {
    ordered_json j;
    j["claim"] = report.claim;
    j["pass"] = report.pass();
    auto checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
    }
    std::cout << report.claim << ": " << (report.pass() ? "all checks pass" : "CHECKS FAILED")
              << " (" << report.checks.size() << " checks)\n";
  }
  return report.pass() ? 0 : 1;
}

int run_draw(const std::string& input, const std::string& kind, const std::string& order_spec,
             const std::string& out_path) {
  qlay::PosetDocument doc = qlay::parse_document(read_input(input));
  qlay::Poset p = qlay::to_poset(doc);

  if (kind == "dominance") {
    write_output(out_path, qlay::svg_dominance(p));
    return 0;
  }
  if (kind == "dot") {
    write_output(out_path, qlay::dot_cover_graph(p));
    return 0;
  }
  if (kind != "arcs") throw qlay::Error(qlay::ErrorKind::Usage, "kind must be dominance, arcs or dot");

  std::vector<int> order;
  if (order_spec == "l1" || order_spec == "l2") {
    if (!p.realizers()) {
      throw qlay::Error(qlay::ErrorKind::Input, "document has no realizers; pass --order <file>");
    }
    order = order_spec == "l1" ? p.realizers()->first : p.realizers()->second;
  } else {
    // file with whitespace-separated element names
    std::istringstream in(read_input(order_spec));
    std::vector<std::string> names;
    std::string token;
    while (in >> token) names.push_back(token);
    order = qlay::order_from_names(p, names);
  }
  qlay::Layout layout = qlay::make_layout(p, order);
  write_output(out_path, qlay::svg_arcs(layout, qlay::queue_assignment(layout)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"queue layouts of two-dimensional posets"};
  app.require_subcommand(1);

  std::string family, input, out_path, model_path, order_spec = "l1", mode = "bnb", kind, claim;
  int w = 0, n = 0, k = 0, w_max = 0, n_max = 40, seeds = 200;
  std::uint64_t seed = 0, node_limit = 50'000'000;
  bool as_json = false;

  auto* gen = app.add_subcommand("gen", "generate a poset family document");
  gen->add_option("--family", family, "r | p | rbid | random2d")->required();
  gen->add_option("--w", w, "family parameter (r, p, rbid)");
  gen->add_option("--n", n, "element count (random2d)");
  gen->add_option("--seed", seed, "PRNG seed (random2d)");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "width, chains, covers, realizer bounds");
  analyze->add_option("input", input, "poset document, or - for stdin")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");

  auto* qn = app.add_subcommand("qn", "exact queue number (bnb) or CNF round-trip");
  qn->add_option("input", input, "poset document, or - for stdin")->required();
  qn->add_option("--mode", mode, "bnb | cnf")->required();
  qn->add_option("--k", k, "queue budget (cnf mode)");
  qn->add_option("--model", model_path, "solver model to decode and validate (cnf mode)");
  qn->add_option("--out", out_path, "DIMACS output file (cnf mode, default stdout)");
  qn->add_option("--node-limit", node_limit, "search node budget (bnb mode)");
  qn->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run a named claim suite");
  verify->add_option("claim", claim,
                     "lemma-rainbow | thm2-bound | props | pw-selfdual | hp-square")
      ->required();
  verify->add_option("--w-max", w_max, "largest family parameter to test");
  verify->add_option("--n", n_max, "largest corpus instance size");
  verify->add_option("--seeds", seeds, "number of corpus instances");
  verify->add_flag("--json", as_json, "machine-readable output");

  auto* draw = app.add_subcommand("draw", "dominance drawing, arc diagram, or DOT covers");
  draw->add_option("input", input, "poset document, or - for stdin")->required();
  draw->add_option("--kind", kind, "dominance | arcs | dot")->required();
  draw->add_option("--order", order_spec, "arcs order: l1 | l2 | file with element names");
  draw->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, w, n, seed, out_path);
    if (analyze->parsed()) return run_analyze(input, as_json);
    if (qn->parsed()) return run_qn(input, mode, k, model_path, out_path, node_limit, as_json);
    if (verify->parsed()) return run_verify(claim, w_max, n_max, seeds, as_json);
    if (draw->parsed()) return run_draw(input, kind, order_spec, out_path);
  } catch (const qlay::Error& e) {
    std::cerr << "error (" << qlay::to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case qlay::ErrorKind::Usage:
      case qlay::ErrorKind::Parameter:
      case qlay::ErrorKind::Parse:
        return 2;
      case qlay::ErrorKind::ResourceLimit:
        return 3;
      case qlay::ErrorKind::InvalidModel:
        return 4;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
