#pragma once

// The fixed gadget lexicon (words over {a,d} whose trajectories on aligned
// chains encode logical tests), assignment embeddings, and the formula
// profiles for the four reduction variants.

#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/cnf.hpp"
#include "pileshuffle/errors.hpp"
#include "pileshuffle/shuffle.hpp"

namespace pileshuffle {
namespace lexicon {

inline constexpr std::string_view key_word = "qqqqss";  // first-round design word
inline constexpr std::string_view start_clause = "daaaadda";
inline constexpr std::string_view pos = "aaddddadaaadad";
inline constexpr std::string_view neg = "daddddadaaadad";
inline constexpr std::string_view dk = "adadddadaaadad";
inline constexpr std::string_view endpos = "aaddddaddddaaaaddaaaadddda";
inline constexpr std::string_view endneg = "daddddaddddadaaadaaaadaaaadddda";
inline constexpr std::string_view enddk = "daaddddaddddaaaaddaaaadddda";
inline constexpr std::string_view next = "a";
inline constexpr std::string_view force_q = "dadaaaadaaaaddddaaaa";
inline constexpr std::string_view pass = "daaaadadadadddda";

/// align = a24 d a18 d a18 d a18 d21 a d5 a17 d a5 d11 a d5 a d4 a d4 a4,
/// expanded from the run-length form.
inline const std::string& align() {
  static const std::string word = [] {
    constexpr std::pair<char, int> runs[] = {
        {'a', 24}, {'d', 1}, {'a', 18}, {'d', 1}, {'a', 18}, {'d', 1},
        {'a', 18}, {'d', 21}, {'a', 1}, {'d', 5}, {'a', 17}, {'d', 1},
        {'a', 5}, {'d', 11}, {'a', 1}, {'d', 5}, {'a', 1}, {'d', 4},
        {'a', 1}, {'d', 4}, {'a', 4}};
    std::string w;
    for (auto [c, len] : runs) w.append(static_cast<size_t>(len), c);
    return w;
  }();
  return word;
}

// Beat aliases within a measure of a key-word-aligned chain.
inline constexpr int beat_start = 0;
inline constexpr int beat_chain_disq = 1;
inline constexpr int beat_actd = 2;
inline constexpr int beat_nactd = 3;
inline constexpr int beat_end = 5;
inline constexpr int beat_clause_disq = 5;

}  // namespace lexicon

inline TypeWord embed_assignment(const TruthAssignment& x) {
  TypeWord out;
  out.reserve(x.size());
  for (bool b : x) out.push_back(b ? 'q' : 's');
  return out;
}

/// Inverse of embed_assignment; requires a word over {q,s}.
inline TruthAssignment decode_embedding(std::string_view w) {
  if (!is_type_word(w)) throw ContractViolation("assignment embedding must be over {q,s}");
  TruthAssignment x;
  x.reserve(w.size());
  for (char c : w) x.push_back(c == 'q');
  return x;
}

/// Literal test selector: positive membership wins over negative.
inline std::string_view test_word(const Clause& c, int var, bool last) {
  if (clause_has(c, var)) return last ? lexicon::endpos : lexicon::pos;
  if (clause_has(c, -var)) return last ? lexicon::endneg : lexicon::neg;
  return last ? lexicon::enddk : lexicon::dk;
}

/// start-clause, a test per variable 1..n-1, and the end-test for n.
inline std::string clause_word(const Clause& c, int n) {
  if (n < 1) throw ContractViolation("clause embedding needs n >= 1");
  for (int lit : c)
    if (std::abs(lit) > n) throw ContractViolation("clause references variable > n");
  std::string out{lexicon::start_clause};
  for (int i = 1; i < n; ++i) out += test_word(c, i, false);
  out += test_word(c, n, true);
  return out;
}

enum class FormulaVariant { I, II, III, V };

inline std::string repeat_word(std::string_view w, int k) {
  std::string out;
  out.reserve(w.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

/// Like clause_word but with every test padded for a first round of k
/// key-word repetitions: dk^{k-1} before each test, pass^{k-1} after the
/// end-test; start-clause untouched.
inline std::string clause_word_repeated(const Clause& c, int n, int k) {
  std::string out{lexicon::start_clause};
  for (int i = 1; i < n; ++i) {
    out += repeat_word(lexicon::dk, k - 1);
    out += test_word(c, i, false);
  }
  out += repeat_word(lexicon::dk, k - 1);
  out += test_word(c, n, true);
  out += repeat_word(lexicon::pass, k - 1);
  return out;
}

/// Change profile embedding a whole formula.
///   I:   clause_1 next clause_2 ... next clause_m
///   II:  as I with force-q before each clause
///   III: as I with align^(6n+7) before each clause
///   V:   as II with the dk/pass padding of clause_word_repeated and
///        pass^(k-1) after each force-q (first round = key word repeated k
///        times)
inline std::string build_formula(FormulaVariant variant, const CnfFormula& f, int k = 1) {
  if (f.clauses.empty() || f.num_vars < 1)
    throw ContractViolation("formula embedding needs n >= 1 and m >= 1");
  if (variant != FormulaVariant::V) k = 1;
  if (k < 1) throw ContractViolation("repetition count must be >= 1");
  const std::string align_prefix =
      variant == FormulaVariant::III
          ? repeat_word(lexicon::align(), 6 * f.num_vars + 7)
          : std::string{};
  std::string out;
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    if (j) out += lexicon::next;
    switch (variant) {
      case FormulaVariant::I:
        out += clause_word(f.clauses[j], f.num_vars);
        break;
      case FormulaVariant::II:
        out += lexicon::force_q;
        out += clause_word(f.clauses[j], f.num_vars);
        break;
      case FormulaVariant::III:
        out += align_prefix;
        out += clause_word(f.clauses[j], f.num_vars);
        break;
      case FormulaVariant::V:
        out += lexicon::force_q;
        out += repeat_word(lexicon::pass, k - 1);
        out += clause_word_repeated(f.clauses[j], f.num_vars, k);
        break;
    }
  }
  return out;
}

}  // namespace pileshuffle
