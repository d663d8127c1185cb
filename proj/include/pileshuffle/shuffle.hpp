#pragma once

// Single- and multi-round pile shuffles, the sortedness test, and minimal
// sorts. Pile indices are 1-based here; the algebra layer's virtual piles
// are 0-based and converted at the boundary.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pileshuffle/errors.hpp"
#include "pileshuffle/perm.hpp"

namespace pileshuffle {

using TypeWord = std::string;                 // word over {q,s}
using PileAssignment = std::vector<int>;      // label s -> pile
using TypeSchedule = std::vector<TypeWord>;   // one word per round

inline bool is_type_word(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'q' || c == 's'; });
}

inline void require_type_word(std::string_view w) {
  if (w.empty() || !is_type_word(w))
    throw ContractViolation("type word must be nonempty over {q,s}");
}

/// Deal perm in deck order into piles, queues preserve order, stacks
/// reverse; collect piles in index order.
inline Permutation shuffle_once(const Permutation& perm, const TypeWord& types,
                                const PileAssignment& piles) {
  require_type_word(types);
  const int n = perm.size();
  const int m = static_cast<int>(types.size());
  if (static_cast<int>(piles.size()) != n)
    throw ContractViolation("pile assignment length != deck size");
  for (int p : piles)
    if (p < 1 || p > m) throw ContractViolation("pile index out of range");

  std::vector<int> deal_order(perm.sequence());  // label at each position
  std::vector<std::vector<int>> pile_contents(static_cast<size_t>(m));
  for (int label : deal_order)
    pile_contents[static_cast<size_t>(piles[static_cast<size_t>(label) - 1]) - 1]
        .push_back(label);

  std::vector<int> mapping(static_cast<size_t>(n));
  int pos = 1;
  for (int j = 0; j < m; ++j) {
    auto& pc = pile_contents[static_cast<size_t>(j)];
    if (types[static_cast<size_t>(j)] == 's') std::reverse(pc.begin(), pc.end());
    for (int label : pc) mapping[static_cast<size_t>(label) - 1] = pos++;
  }
  return Permutation(std::move(mapping));
}

/// True iff (types, piles) sorts perm: p(s+1) >= p(s) + [pi(s+1) prec pi(s)]
/// at every s, where prec is < for a queue pile and > for a stack pile.
inline bool check_sort(const TypeWord& types, const PileAssignment& piles,
                       const Permutation& perm) {
  require_type_word(types);
  const int n = perm.size();
  const int m = static_cast<int>(types.size());
  if (static_cast<int>(piles.size()) != n) return false;
  for (int p : piles)
    if (p < 1 || p > m) return false;
  for (int s = 1; s + 1 <= n; ++s) {
    const char t = types[static_cast<size_t>(piles[static_cast<size_t>(s) - 1]) - 1];
    const bool forced = t == 'q' ? perm(s + 1) < perm(s) : perm(s + 1) > perm(s);
    if (piles[static_cast<size_t>(s)] < piles[static_cast<size_t>(s) - 1] + (forced ? 1 : 0))
      return false;
  }
  return true;
}

/// Greedy minimal sort: p*(1)=1, advance a pile exactly when the current
/// pile's type forces it. Absent iff p* would exceed m.
inline std::optional<PileAssignment> minimal_sort(const Permutation& perm,
                                                  const TypeWord& types) {
  require_type_word(types);
  const int n = perm.size();
  const int m = static_cast<int>(types.size());
  PileAssignment p(static_cast<size_t>(n));
  if (n == 0) return p;
  p[0] = 1;
  for (int s = 1; s + 1 <= n; ++s) {
    const char t = types[static_cast<size_t>(p[static_cast<size_t>(s) - 1]) - 1];
    const bool forced = t == 'q' ? perm(s + 1) < perm(s) : perm(s + 1) > perm(s);
    p[static_cast<size_t>(s)] = p[static_cast<size_t>(s) - 1] + (forced ? 1 : 0);
    if (p[static_cast<size_t>(s)] > m) return std::nullopt;
  }
  return p;
}

inline Permutation shuffle_multi(const Permutation& perm, const TypeSchedule& schedule,
                                 const std::vector<PileAssignment>& assignments) {
  if (schedule.size() != assignments.size())
    throw ContractViolation("schedule/assignment count mismatch");
  Permutation cur = perm;
  for (size_t t = 0; t < schedule.size(); ++t)
    cur = shuffle_once(cur, schedule[t], assignments[t]);
  return cur;
}

/// Dealer's choice, one round, at most max_piles piles: each new pile's type
/// is committed lazily at its first forcing comparison; undetermined piles
/// default to queue. Uses the minimum possible number of piles.
inline std::optional<std::pair<TypeWord, PileAssignment>> dealer_choice_single(
    const Permutation& perm, int max_piles) {
  if (max_piles < 1) throw ContractViolation("max_piles must be >= 1");
  const int n = perm.size();
  if (n <= 1) return std::make_pair(TypeWord("q"), PileAssignment(static_cast<size_t>(n), 1));

  TypeWord types;
  PileAssignment p(static_cast<size_t>(n));
  p[0] = 1;
  char cur = 0;  // current pile's committed type, 0 while free
  for (int s = 1; s + 1 <= n; ++s) {
    const bool asc = perm(s + 1) > perm(s);
    int pile = p[static_cast<size_t>(s) - 1];
    if (cur == 0) {
      cur = asc ? 'q' : 's';  // first comparison fixes the direction for free
    } else if ((cur == 'q') != asc) {
      // pile closed; the crossing comparison constrains neither pile, so
      // the new pile stays uncommitted
      types.push_back(cur);
      ++pile;
      cur = 0;
    }
    p[static_cast<size_t>(s)] = pile;
  }
  types.push_back(cur == 0 ? 'q' : cur);
  if (static_cast<int>(types.size()) > max_piles) return std::nullopt;
  return std::make_pair(std::move(types), std::move(p));
}

}  // namespace pileshuffle
