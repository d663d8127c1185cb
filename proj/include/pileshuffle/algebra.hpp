#pragma once

// Type-word algebra: inverse, dual, backslash composition, and the virtual
// shuffle machinery (type-indicator recurrence, assignment virtualization
// and its inverse). Virtual piles are 0-based throughout this module.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pileshuffle/errors.hpp"
#include "pileshuffle/shuffle.hpp"

namespace pileshuffle {

inline TypeWord invert_word(TypeWord x) {
  for (char& c : x) c = c == 'q' ? 's' : 'q';
  return x;
}

inline TypeWord dual_word(TypeWord x) {
  std::reverse(x.begin(), x.end());
  return invert_word(std::move(x));
}

/// x1 \ x2: for each pile of round 2, a copy of x1 (queue pile) or its dual
/// (stack pile).
inline TypeWord compose_pair(const TypeWord& x1, const TypeWord& x2) {
  TypeWord out;
  out.reserve(x1.size() * x2.size());
  const TypeWord d = dual_word(x1);
  for (char c : x2) out += (c == 'q') ? x1 : d;
  return out;
}

/// Left fold of compose_pair; the empty schedule composes to the single
/// virtual queue pile "q".
inline TypeWord compose_fold(const TypeSchedule& schedule) {
  if (schedule.empty()) return "q";
  TypeWord acc = schedule[0];
  for (size_t t = 1; t < schedule.size(); ++t) acc = compose_pair(acc, schedule[t]);
  return acc;
}

/// rev_m applied b times to y, by parity of b.
inline int rev_pile(int y, int m, int b) { return (b & 1) ? m - 1 - y : y; }

/// levels[t] holds the stack-indicator of the composed suffix rounds
/// t..T-1, so levels[T] = {0} and levels[0] describes the full virtual word.
inline std::vector<std::vector<int>> indicator_levels(const TypeSchedule& schedule) {
  const size_t T = schedule.size();
  std::vector<std::vector<int>> lv(T + 1);
  lv[T] = {0};
  for (size_t t = T; t-- > 0;) {
    require_type_word(schedule[t]);
    const int m = static_cast<int>(schedule[t].size());
    lv[t].resize(static_cast<size_t>(m) * lv[t + 1].size());
    for (size_t qv = 0; qv < lv[t + 1].size(); ++qv) {
      const int suffix_bit = lv[t + 1][qv];
      for (int r = 0; r < m; ++r) {
        const int own =
            schedule[t][static_cast<size_t>(rev_pile(r, m, suffix_bit))] == 's' ? 1 : 0;
        lv[t][static_cast<size_t>(r) + static_cast<size_t>(m) * qv] = own ^ suffix_bit;
      }
    }
  }
  return lv;
}

/// Virtual type word via the backward indicator recurrence.
inline TypeWord compose_recurrence(const TypeSchedule& schedule) {
  const auto lv = indicator_levels(schedule);
  TypeWord out;
  out.reserve(lv[0].size());
  for (int b : lv[0]) out.push_back(b ? 's' : 'q');
  return out;
}

struct ScheduleComposition {
  TypeSchedule schedule;
  TypeWord virtual_types;
  std::vector<long long> virtual_widths;  // widths of the composed suffixes, last entry 1
};

inline ScheduleComposition compose_schedule(const TypeSchedule& schedule) {
  ScheduleComposition out;
  out.schedule = schedule;
  out.virtual_types = compose_recurrence(schedule);
  out.virtual_widths.assign(schedule.size() + 1, 1);
  for (size_t t = schedule.size(); t-- > 0;)
    out.virtual_widths[t] =
        out.virtual_widths[t + 1] * static_cast<long long>(schedule[t].size());
  return out;
}

/// Per-round 0-based assignments -> 0-based virtual assignment.
inline PileAssignment virtualize_assignments(const TypeSchedule& schedule,
                                             const std::vector<PileAssignment>& rounds) {
  const size_t T = schedule.size();
  if (rounds.size() != T) throw ContractViolation("round count mismatch");
  if (T == 0) return {};
  const size_t n = rounds[0].size();
  for (size_t t = 0; t < T; ++t) {
    if (rounds[t].size() != n) throw ContractViolation("assignment length mismatch");
    for (int p : rounds[t])
      if (p < 0 || p >= static_cast<int>(schedule[t].size()))
        throw ContractViolation("pile index out of round width");
  }
  const auto lv = indicator_levels(schedule);
  PileAssignment vhat = rounds[T - 1];
  for (size_t t = T - 1; t-- > 0;) {
    const int m = static_cast<int>(schedule[t].size());
    for (size_t i = 0; i < n; ++i) {
      const int suffix_bit = lv[t + 1][static_cast<size_t>(vhat[i])];
      vhat[i] = rev_pile(rounds[t][i], m, suffix_bit) + m * vhat[i];
    }
  }
  return vhat;
}

/// Inverse of virtualize_assignments.
inline std::vector<PileAssignment> devirtualize_assignments(const TypeSchedule& schedule,
                                                            const PileAssignment& vpiles) {
  const size_t T = schedule.size();
  long long width = 1;
  for (const auto& w : schedule) width *= static_cast<long long>(w.size());
  for (int v : vpiles)
    if (v < 0 || v >= width) throw ContractViolation("virtual pile out of range");
  if (T == 0) return {};
  const auto lv = indicator_levels(schedule);
  std::vector<PileAssignment> rounds(T, PileAssignment(vpiles.size()));
  PileAssignment cur = vpiles;
  for (size_t t = 0; t + 1 < T; ++t) {
    const int m = static_cast<int>(schedule[t].size());
    for (size_t i = 0; i < cur.size(); ++i) {
      const int qnext = cur[i] / m;
      const int suffix_bit = lv[t + 1][static_cast<size_t>(qnext)];
      rounds[t][i] = rev_pile(cur[i] % m, m, suffix_bit);
      cur[i] = qnext;
    }
  }
  rounds[T - 1] = cur;
  return rounds;
}

/// Sort perm with the given schedule if possible; returns 1-based per-round
/// assignments ready for shuffle_multi.
inline std::optional<std::vector<PileAssignment>> multi_round_sort(
    const Permutation& perm, const TypeSchedule& schedule) {
  const TypeWord vtypes = compose_fold(schedule);
  auto vp = minimal_sort(perm, vtypes);
  if (!vp) return std::nullopt;
  if (schedule.empty()) return std::vector<PileAssignment>{};
  for (int& v : *vp) --v;  // to 0-based virtual piles
  auto rounds = devirtualize_assignments(schedule, *vp);
  for (auto& r : rounds)
    for (int& v : r) ++v;
  return rounds;
}

}  // namespace pileshuffle
