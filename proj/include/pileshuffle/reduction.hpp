#pragma once

// SAT in, decision instances out: the reduction families, realization of
// sort questions, and decoding of satisfying assignments from accepting
// schedules.

#include <string>
#include <vector>

#include "pileshuffle/algebra.hpp"
#include "pileshuffle/cnf.hpp"
#include "pileshuffle/errors.hpp"
#include "pileshuffle/family.hpp"
#include "pileshuffle/gadgets.hpp"
#include "pileshuffle/perm.hpp"

namespace pileshuffle {

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainQuestion {
  std::string profile;
  FactoredFamily family;
};

struct SortQuestion {
  Permutation perm;
  FactoredFamily family;
};

/// Smallest k with 6k-2 >= n and 6k >= m, so a formula fits the
/// repeated-round family after padding.
inline int min_repetition(const CnfFormula& f) {
  const int for_vars = (f.num_vars + 2 + 5) / 6;
  const int for_clauses = (static_cast<int>(f.clauses.size()) + 5) / 6;
  return std::max({1, for_vars, for_clauses});
}

/// Pad with unused dummy variables to 6k-2 and duplicate existing clauses
/// to 6k, leaving satisfiability untouched.
inline CnfFormula pad_formula(const CnfFormula& f, int k) {
  CnfFormula out = f;
  out.num_vars = 6 * k - 2;
  for (size_t j = 0; out.clauses.size() < static_cast<size_t>(6 * k); ++j)
    out.clauses.push_back(f.clauses[j % f.clauses.size()]);
  return out;
}

inline ChainQuestion reduce(FormulaVariant variant, const CnfFormula& f, int k = 1) {
  if (f.num_vars < 1 || f.clauses.empty())
    throw ContractViolation("reduction needs n >= 1 and m >= 1");
  // the clause gadget tests one polarity per variable (positive wins), so a
  // clause holding x and not-x would be transcribed as just x; that does not
  // preserve satisfiability, and such clauses are refused here
  for (const auto& c : f.clauses)
    for (int lit : c)
      if (lit > 0 && clause_has(c, -lit))
        throw ContractViolation("reduction cannot transcribe complementary literals");
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  const TypeWord key{lexicon::key_word};
  switch (variant) {
    case FormulaVariant::I:
      return {build_formula(variant, f),
              {{RoundSpec::Fixed(key), RoundSpec::Free(n + 1),
                RoundSpec::Fixed(TypeWord(static_cast<size_t>(m), 'q'))}}};
    case FormulaVariant::II:
      return {build_formula(variant, f),
              {{RoundSpec::Fixed(key), RoundSpec::Free(n + 2), RoundSpec::Free(m)}}};
    case FormulaVariant::III:
      return {build_formula(variant, f),
              {{RoundSpec::Free(6), RoundSpec::Free(13 * n + 15), RoundSpec::Free(m)}}};
    case FormulaVariant::V: {
      if (k < min_repetition(f))
        throw ContractViolation("repetition count too small for formula; need k >= " +
                                std::to_string(min_repetition(f)));
      const CnfFormula padded = pad_formula(f, k);
      return {build_formula(variant, padded, k),
              {{RoundSpec::Power(key, k), RoundSpec::Free(6 * k), RoundSpec::Free(6 * k)}}};
    }
  }
  throw ContractViolation("unknown variant");
}

inline SortQuestion reduce_to_sort(const ChainQuestion& q) {
  return {realize_permutation(q.profile), q.family};
}

/// Extract the satisfying assignment from an accepting schedule. The
/// witness is first normalized into the queue-leading equivalence class
/// (round 3 leading with s: round 2 is replaced by its dual, round 3 by
/// its inverse).
inline TruthAssignment decode_assignment(FormulaVariant variant, TypeSchedule witness,
                                         int num_vars, int k = 1) {
  if (witness.size() != 3) throw DecodeError("witness must have 3 rounds");
  if (!witness[2].empty() && witness[2][0] == 's') {
    witness[1] = dual_word(witness[1]);
    witness[2] = invert_word(witness[2]);
  }
  const TypeWord& a = witness[1];
  auto fail = [&](const std::string& why) {
    throw DecodeError("witness round 2 not decodable: " + why + " (got " + a + ")");
  };
  for (char c : witness[2])
    if (c != 'q') fail("round 3 not all queues after normalization");

  size_t lo = 0, hi = a.size();  // the Psi(x) segment within round 2
  switch (variant) {
    case FormulaVariant::I:
      if (a.size() != static_cast<size_t>(num_vars) + 1) fail("wrong width");
      hi = a.size() - 1;
      break;
    case FormulaVariant::II:
      if (a.size() != static_cast<size_t>(num_vars) + 2) fail("wrong width");
      if (a.front() != 'q') fail("missing leading q");
      lo = 1;
      hi = a.size() - 1;
      break;
    case FormulaVariant::III: {
      const size_t guard = 2 * (6 * static_cast<size_t>(num_vars) + 7);
      if (a.size() != guard + static_cast<size_t>(num_vars) + 1) fail("wrong width");
      for (size_t i = 0; i < guard; ++i)
        if (a[i] != (i % 2 == 0 ? 'q' : 's')) fail("bad guard");
      lo = guard;
      hi = a.size() - 1;
      break;
    }
    case FormulaVariant::V: {
      if (a.size() != static_cast<size_t>(6 * k)) fail("wrong width");
      if (a.front() != 'q') fail("missing leading q");
      // dummy padding variables are ignored
      lo = 1;
      hi = 1 + static_cast<size_t>(num_vars);
      break;
    }
  }
  if (a.back() != 'q') fail("missing trailing q");
  return decode_embedding(std::string_view(a).substr(lo, hi - lo));
}

}  // namespace pileshuffle
