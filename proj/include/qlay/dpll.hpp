#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlay/error.hpp"

namespace qlay {

/// Minimal DPLL solver: unit propagation plus branching on the most frequent
/// open variable. Only meant for the self-test instances (a handful of dozen
/// variables); anything serious goes to an external solver through DIMACS.
class DpllSolver {
 public:
  DpllSolver(int num_vars, const std::vector<std::vector<int>>& clauses,
             std::uint64_t decision_limit = 10'000'000)
      : num_vars_(num_vars), clauses_(clauses), decision_limit_(decision_limit) {}

  /// Returns a satisfying assignment indexed by variable (slot 0 unused), or
  /// nullopt when unsatisfiable.
  std::optional<std::vector<bool>> solve() {
    assignment_.assign(num_vars_ + 1, Unassigned);
    if (!search()) return std::nullopt;
    std::vector<bool> model(num_vars_ + 1, false);
    for (int v = 1; v <= num_vars_; v++) model[v] = assignment_[v] == True;
    return model;
  }

 private:
  enum Value : signed char { False = 0, True = 1, Unassigned = -1 };

  Value value_of(int lit) const {
    Value v = assignment_[lit > 0 ? lit : -lit];
    if (v == Unassigned) return Unassigned;
    return (lit > 0) == (v == True) ? True : False;
  }

  /// Returns false on conflict; appends assigned vars to trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int open = 0, open_lit = 0;
        bool satisfied = false;
        for (int lit : clause) {
          Value v = value_of(lit);
          if (v == True) {
            satisfied = true;
            break;
          }
          if (v == Unassigned) {
            open++;
            open_lit = lit;
          }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          int var = open_lit > 0 ? open_lit : -open_lit;
          assignment_[var] = open_lit > 0 ? True : False;
          trail.push_back(var);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int var : trail) assignment_[var] = Unassigned;
      return false;
    }

    // branch on the unassigned variable occurring most often
    std::vector<int> count(num_vars_ + 1, 0);
    for (const auto& clause : clauses_) {
      bool satisfied = false;
      for (int lit : clause) satisfied = satisfied || value_of(lit) == True;
      if (satisfied) continue;
      for (int lit : clause) {
        if (value_of(lit) == Unassigned) count[lit > 0 ? lit : -lit]++;
      }
    }
    int branch_var = 0;
    for (int v = 1; v <= num_vars_; v++) {
      if (assignment_[v] == Unassigned && (branch_var == 0 || count[v] > count[branch_var])) {
        branch_var = v;
      }
    }
    if (branch_var == 0) return true;  // everything assigned and consistent

    if (++decisions_ > decision_limit_) {
      throw Error(ErrorKind::ResourceLimit, "DPLL exceeded its decision limit");
    }
    for (Value v : {True, False}) {
      assignment_[branch_var] = v;
      if (search()) return true;
      assignment_[branch_var] = Unassigned;
    }
    for (int var : trail) assignment_[var] = Unassigned;
    return false;
  }

  int num_vars_;
  const std::vector<std::vector<int>>& clauses_;
  std::uint64_t decision_limit_;
  std::uint64_t decisions_ = 0;
  std::vector<Value> assignment_;
};

inline std::optional<std::vector<bool>> solve_dpll(int num_vars,
                                                   const std::vector<std::vector<int>>& clauses,
                                                   std::uint64_t decision_limit = 10'000'000) {
  return DpllSolver(num_vars, clauses, decision_limit).solve();
}

}  // namespace qlay
