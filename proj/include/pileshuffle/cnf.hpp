#pragma once

// CNF formulas as literal sets, DIMACS ingestion, and truth assignments.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/errors.hpp"

namespace pileshuffle {

using Clause = std::vector<int>;  // signed 1-based literals, sorted, unique
using TruthAssignment = std::vector<bool>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

inline Clause make_clause(std::vector<int> literals) {
  std::sort(literals.begin(), literals.end(),
            [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b; });
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  return literals;
}

inline bool clause_has(const Clause& c, int literal) {
  return std::find(c.begin(), c.end(), literal) != c.end();
}

inline bool clause_satisfied(const Clause& c, const TruthAssignment& x) {
  for (int lit : c) {
    const bool v = x[static_cast<size_t>(std::abs(lit)) - 1];
    if (lit > 0 ? v : !v) return true;
  }
  return false;
}

inline bool satisfies(const CnfFormula& f, const TruthAssignment& x) {
  for (const auto& c : f.clauses)
    if (!clause_satisfied(c, x)) return false;
  return true;
}

/// Standard DIMACS CNF: `c` comments, a `p cnf n m` header, 0-terminated
/// clauses. Clause literals must reference declared variables; empty
/// clauses are rejected.
inline CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  int declared_clauses = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<int> pending;
  auto fail = [&](const std::string& msg) {
    throw ParseError("dimacs line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
        fail("bad problem header");
      if (f.num_vars < 1 || declared_clauses < 1) fail("need n >= 1 and m >= 1");
      continue;
    }
    if (declared_clauses < 0) fail("clause before header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.empty()) fail("empty clause");
        f.clauses.push_back(make_clause(pending));
        pending.clear();
      } else {
        if (std::abs(lit) > f.num_vars) fail("literal out of range");
        pending.push_back(lit);
      }
    }
    if (ls.bad() || (!ls.eof() && ls.fail())) fail("bad literal token");
  }
  if (!pending.empty()) fail("unterminated clause");
  if (declared_clauses < 0) throw ParseError("dimacs: missing header");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw ParseError("dimacs: clause count does not match header");
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace pileshuffle
