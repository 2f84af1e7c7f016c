#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlay/error.hpp"
#include "qlay/layout.hpp"
#include "qlay/poset.hpp"

namespace qlay {

/// Propositional encoding of "the poset admits a linear extension whose cover
/// layout uses at most k queues".
///
/// Variables, in this fixed order:
///   1 .. C(n,2)            order variable per unordered pair {u, v} with
///                          u < v as indices, lexicographic by (u, v);
///                          true means "u precedes v".
///   C(n,2)+1 .. +m*k       queue variable per (edge rank, queue index).
/// Clause families, in this fixed order:
///   units        one per comparable pair, following the closure;
///   transitivity both cyclic orientations forbidden per unordered triple;
///   at-least-one one queue per edge (no at-most-one: extra memberships
///                never affect satisfiability; the decoder takes the lowest
///                index);
///   nesting      per unordered pair of vertex-disjoint edges and queue index,
///                both nesting directions excluded from sharing the queue.
struct CnfInstance {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // cover edges as element indices
  std::vector<std::vector<int>> clauses;   // DIMACS literals
  std::uint64_t poset_hash = 0;

  struct Counts {
    std::size_t units = 0;
    std::size_t transitivity = 0;
    std::size_t at_least_one = 0;
    std::size_t nesting = 0;
  } counts;

  int order_var_count() const { return n * (n - 1) / 2; }
  int var_count() const { return order_var_count() + static_cast<int>(edges.size()) * k; }

  /// Variable for the unordered pair {u, v}, u < v as indices.
  int order_var(int u, int v) const {
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in this order
    return u * n - u * (u + 1) / 2 + (v - u);
  }

  /// Signed literal meaning "u precedes v".
  int precedes_literal(int u, int v) const {
    return u < v ? order_var(u, v) : -order_var(v, u);
  }

  int queue_var(int edge_rank, int queue_index) const {
    return order_var_count() + edge_rank * k + queue_index + 1;
  }
};

/// Stable fingerprint of a poset (elements and closure), FNV-1a.
inline std::uint64_t poset_fingerprint(const Poset& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; b++) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(p.size()));
  for (const auto& name : p.elements()) {
    for (unsigned char ch : name) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  }
  for (int u = 0; u < p.size(); u++) {
    p.above(u).for_each([&](int v) { mix((std::uint64_t(u) << 32) | std::uint64_t(v)); });
  }
  return h;
}

/// Builds the instance; satisfiable iff the poset has a k-queue layout.
/// Identical inputs produce identical instances, clause for clause.
inline CnfInstance encode_cnf(const Poset& p, int k) {
  if (k < 1) throw Error(ErrorKind::Parameter, "queue budget k must be at least 1");
  CnfInstance cnf;
  cnf.n = p.size();
  cnf.k = k;
  cnf.edges = cover_graph(p).edges;
  cnf.poset_hash = poset_fingerprint(p);
  int n = cnf.n;
  int m = static_cast<int>(cnf.edges.size());

  for (int u = 0; u < n; u++) {
    for (int v = u + 1; v < n; v++) {
      if (p.less(u, v)) cnf.clauses.push_back({cnf.precedes_literal(u, v)});
      else if (p.less(v, u)) cnf.clauses.push_back({cnf.precedes_literal(v, u)});
    }
  }
  cnf.counts.units = cnf.clauses.size();

  for (int a = 0; a < n; a++) {
    for (int b = a + 1; b < n; b++) {
      for (int c = b + 1; c < n; c++) {
        cnf.clauses.push_back({-cnf.precedes_literal(a, b), -cnf.precedes_literal(b, c),
                               -cnf.precedes_literal(c, a)});
        cnf.clauses.push_back({-cnf.precedes_literal(b, a), -cnf.precedes_literal(c, b),
                               -cnf.precedes_literal(a, c)});
      }
    }
  }
  cnf.counts.transitivity = cnf.clauses.size() - cnf.counts.units;

  for (int e = 0; e < m; e++) {
    std::vector<int> clause;
    for (int q = 0; q < k; q++) clause.push_back(cnf.queue_var(e, q));
    cnf.clauses.push_back(std::move(clause));
  }
  cnf.counts.at_least_one = m;

  std::size_t before = cnf.clauses.size();
  for (int e = 0; e < m; e++) {
    auto [a, b] = cnf.edges[e];
    for (int f = e + 1; f < m; f++) {
      auto [c, d] = cnf.edges[f];
      if (a == c || a == d || b == c || b == d) continue;  // shared endpoints never nest
      for (int q = 0; q < k; q++) {
        // e nests f: a before c and d before b
        cnf.clauses.push_back({-cnf.precedes_literal(a, c), -cnf.precedes_literal(d, b),
                               -cnf.queue_var(e, q), -cnf.queue_var(f, q)});
        // f nests e
        cnf.clauses.push_back({-cnf.precedes_literal(c, a), -cnf.precedes_literal(b, d),
                               -cnf.queue_var(e, q), -cnf.queue_var(f, q)});
      }
    }
  }
  cnf.counts.nesting = cnf.clauses.size() - before;
  return cnf;
}

/// DIMACS CNF with a comment header documenting the variable blocks.
inline void write_dimacs(const CnfInstance& cnf, std::ostream& out) {
  int m = static_cast<int>(cnf.edges.size());
  out << "c queue-layout encoding, poset fingerprint " << std::hex << cnf.poset_hash << std::dec
      << "\n";
  out << "c n=" << cnf.n << " cover-edges=" << m << " k=" << cnf.k << "\n";
  out << "c vars 1.." << cnf.order_var_count()
      << ": order vars, one per element pair {u,v}, lexicographic, true = u precedes v\n";
  out << "c vars " << cnf.order_var_count() + 1 << ".." << cnf.var_count()
      << ": queue vars by (edge rank, queue index)\n";
  out << "c clause families: " << cnf.counts.units << " unit, " << cnf.counts.transitivity
      << " transitivity, " << cnf.counts.at_least_one << " at-least-one, " << cnf.counts.nesting
      << " nesting\n";
  out << "p cnf " << cnf.var_count() << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
}

inline std::string dimacs_string(const CnfInstance& cnf) {
  std::ostringstream out;
  write_dimacs(cnf, out);
  return out.str();
}

/// Parsed solver output: either a truth assignment or a reported UNSAT.
struct ModelText {
  bool unsat = false;
  std::vector<int> literals;
};

/// Reads solver output: bare integer literals and/or "v "-prefixed lines,
/// terminated by 0 or end of input. "c"/"s" lines are skipped; an UNSAT
/// status line flips the unsat flag.
inline ModelText parse_model_text(std::istream& in) {
  ModelText model;
  std::string line;
  bool done = false;
  while (!done && std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    bool first = true;
    while (ls >> tok) {
      if (first && tok == "c") break;
      if (first && tok == "s") {
        std::string rest;
        std::getline(ls, rest);
        if (rest.find("UNSAT") != std::string::npos) model.unsat = true;
        break;
      }
      first = false;
      if (tok == "v") continue;
      if (tok == "SAT" || tok == "SATISFIABLE") continue;
      if (tok == "UNSAT" || tok == "UNSATISFIABLE") {
        model.unsat = true;
        continue;
      }
      int lit = 0;
      try {
        lit = std::stoi(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidModel, "unexpected token '" + tok + "' in model");
      }
      if (lit == 0) {
        done = true;
        break;
      }
      model.literals.push_back(lit);
    }
  }
  return model;
}

/// Layout recovered from a satisfying assignment.
struct DecodedLayout {
  std::vector<int> order;
  QueueAssignment assignment;
};

/// Turns a model back into a certified layout. The model must satisfy every
/// clause (invalid-model error otherwise); the recovered order and assignment
/// are re-validated against the poset, and a failure there is an internal
/// error because it indicates an encoder bug, not bad input.
inline DecodedLayout decode_model(const CnfInstance& cnf, const Poset& p,
                                  const std::vector<int>& literals) {
  if (poset_fingerprint(p) != cnf.poset_hash) {
    throw Error(ErrorKind::Input, "model decoding against a different poset than encoded");
  }
  std::vector<char> value(cnf.var_count() + 1, 0), assigned(cnf.var_count() + 1, 0);
  for (int lit : literals) {
    int var = lit > 0 ? lit : -lit;
    if (var < 1 || var > cnf.var_count()) {
      throw Error(ErrorKind::InvalidModel, "literal " + std::to_string(lit) + " out of range");
    }
    value[var] = lit > 0;
    assigned[var] = 1;
  }
  auto truth = [&](int lit) {
    int var = lit > 0 ? lit : -lit;
    bool v = value[var];
    return lit > 0 ? v : !v;
  };
  for (std::size_t ci = 0; ci < cnf.clauses.size(); ci++) {
    bool satisfied = false;
    for (int lit : cnf.clauses[ci]) satisfied = satisfied || truth(lit);
    if (!satisfied) {
      throw Error(ErrorKind::InvalidModel,
                  "assignment falsifies clause " + std::to_string(ci + 1));
    }
  }

  int n = cnf.n;
  // position of u = number of elements u does NOT precede
  std::vector<int> precedes_count(n, 0);
  for (int u = 0; u < n; u++) {
    for (int v = 0; v < n; v++) {
      if (u != v && truth(cnf.precedes_literal(u, v))) precedes_count[u]++;
    }
  }
  DecodedLayout decoded;
  decoded.order.assign(n, -1);
  for (int u = 0; u < n; u++) {
    int position = n - 1 - precedes_count[u];
    if (position < 0 || position >= n || decoded.order[position] != -1) {
      throw Error(ErrorKind::Internal, "order variables do not describe a total order");
    }
    decoded.order[position] = u;
  }
  if (!is_linear_extension(p, decoded.order)) {
    throw Error(ErrorKind::Internal, "decoded order is not a linear extension");
  }

  Layout layout = make_layout(p, decoded.order);
  int m = static_cast<int>(cnf.edges.size());
  decoded.assignment.queue_of.assign(m, 0);
  for (int e = 0; e < m; e++) {
    for (int q = 0; q < cnf.k; q++) {
      if (truth(cnf.queue_var(e, q))) {
        decoded.assignment.queue_of[e] = q + 1;  // lowest true index wins
        break;
      }
    }
    if (decoded.assignment.queue_of[e] == 0) {
      throw Error(ErrorKind::Internal, "edge without a queue despite at-least-one clause");
    }
    decoded.assignment.k = std::max(decoded.assignment.k, decoded.assignment.queue_of[e]);
  }
  // cnf.edges and layout.edges() share the canonical cover order
  const auto& edges = layout.edges();
  for (int e = 0; e < m; e++) {
    for (int f = e + 1; f < m; f++) {
      if (decoded.assignment.queue_of[e] != decoded.assignment.queue_of[f]) continue;
      if (nests(edges[e], edges[f]) || nests(edges[f], edges[e])) {
        throw Error(ErrorKind::Internal, "decoded assignment has nesting edges in one queue");
      }
    }
  }
  return decoded;
}

}  // namespace qlay
