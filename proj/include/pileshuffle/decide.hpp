#pragma once

// Decision procedures: brute-force SAT, and feasibility of (profile,
// family) questions by naive schedule enumeration or by the structured
// last-round search.

#include <optional>
#include <string>
#include <vector>

#include "pileshuffle/algebra.hpp"
#include "pileshuffle/chain.hpp"
#include "pileshuffle/cnf.hpp"
#include "pileshuffle/errors.hpp"
#include "pileshuffle/family.hpp"
#include "pileshuffle/reduction.hpp"

namespace pileshuffle {

/// Lexicographically first satisfying assignment (true sorts before
/// false, x1 most significant), or absent.
inline std::optional<TruthAssignment> sat_brute_force(const CnfFormula& f,
                                                      int var_limit = 20) {
  if (f.num_vars > var_limit)
    throw CapExceeded("sat_brute_force: " + std::to_string(f.num_vars) +
                      " variables exceeds limit " + std::to_string(var_limit));
  const int n = f.num_vars;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    TruthAssignment x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = ((mask >> (n - 1 - i)) & 1) == 0;
    if (satisfies(f, x)) return x;
  }
  return std::nullopt;
}

enum class DecideStrategy { naive, structured };

struct DecideOptions {
  long long naive_cap = 1LL << 24;
};

namespace detail {

/// Search the last free round: the profile's trajectory crosses each
/// phrase boundary at most once, so reachable (phrase, entry position)
/// pairs decide all last-round words at once. Phrases below seed.size()
/// have forced types.
inline std::optional<TypeWord> last_round_search(const TypeWord& phrase_word,
                                                 std::string_view profile, int m3,
                                                 const TypeWord& seed) {
  const int L = static_cast<int>(phrase_word.size());
  const int len = static_cast<int>(profile.size());
  const TypeWord dual = dual_word(phrase_word);
  const ChainAutomaton chain_q(phrase_word), chain_s(dual);

  struct Entry {
    int from_pos = -1;  // entry position of the previous phrase
    char type = 0;      // type chosen for the previous phrase
  };
  // reach[j][pos] = how phrase j was entered having consumed pos symbols
  std::vector<std::vector<Entry>> reach(static_cast<size_t>(m3));
  for (auto& r : reach) r.assign(static_cast<size_t>(len) + 1, Entry{});
  std::vector<std::vector<char>> seen(static_cast<size_t>(m3),
                                      std::vector<char>(static_cast<size_t>(len) + 1, 0));

  auto build_witness = [&](int j, int pos, char last_type, bool include_last) {
    TypeWord w(static_cast<size_t>(m3), 'q');
    for (size_t t = 0; t < seed.size(); ++t) w[t] = seed[t];
    if (include_last) w[static_cast<size_t>(j)] = last_type;
    int jj = j, pp = pos;
    while (jj > 0) {
      const Entry& e = reach[static_cast<size_t>(jj)][static_cast<size_t>(pp)];
      w[static_cast<size_t>(jj) - 1] = e.type;
      pp = e.from_pos;
      --jj;
    }
    return w;
  };

  seen[0][0] = 1;
  for (int j = 0; j < m3; ++j) {
    for (int pos = 0; pos <= len; ++pos) {
      if (!seen[static_cast<size_t>(j)][static_cast<size_t>(pos)]) continue;
      for (char c : {'q', 's'}) {
        if (j < static_cast<int>(seed.size()) && c != seed[static_cast<size_t>(j)]) continue;
        const ChainAutomaton& local = c == 'q' ? chain_q : chain_s;
        int st = 0;
        int u = pos;
        for (; u < len; ++u) {
          const int ns = local.step(st, profile[static_cast<size_t>(u)]);
          if (ns == L) break;  // exits this phrase after consuming symbol u
          st = ns;
        }
        if (u == len) return build_witness(j, pos, c, true);  // word ends inside phrase j
        if (j + 1 >= m3) continue;  // exit from the last phrase hits the sink
        if (!seen[static_cast<size_t>(j) + 1][static_cast<size_t>(u) + 1]) {
          seen[static_cast<size_t>(j) + 1][static_cast<size_t>(u) + 1] = 1;
          reach[static_cast<size_t>(j) + 1][static_cast<size_t>(u) + 1] = {pos, c};
        }
        // exiting on the final symbol lands on the next phrase's start, accepting
        if (u + 1 == len) return build_witness(j + 1, u + 1, 0, false);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Witness schedule from the family whose chain accepts the profile, or
/// absent. The naive strategy enumerates every schedule; the structured
/// strategy enumerates all rounds but the last and searches the last
/// round through its phrase structure.
inline std::optional<TypeSchedule> decide_feasibility(std::string_view profile,
                                                      const FactoredFamily& family,
                                                      DecideStrategy strategy,
                                                      const DecideOptions& opts = {}) {
  if (!is_change_profile(profile)) throw ContractViolation("profile must be over {a,d}");

  if (strategy == DecideStrategy::naive || family.rounds.empty()) {
    const long long total = family.schedule_count();
    if (total > opts.naive_cap)
      throw CapExceeded("naive enumeration requires " + std::to_string(total) +
                        " schedules, cap is " + std::to_string(opts.naive_cap));
    std::optional<TypeSchedule> witness;
    family.for_each_schedule([&](const TypeSchedule& sched) {
      if (ChainAutomaton(compose_fold(sched)).accepts(profile)) {
        witness = sched;
        return false;
      }
      return true;
    });
    return witness;
  }

  // structured: split off the last round
  FactoredFamily prefix{std::vector<RoundSpec>(family.rounds.begin(),
                                               family.rounds.end() - 1)};
  const RoundSpec& last = family.rounds.back();
  long long prefix_total = prefix.schedule_count();
  if (prefix_total > opts.naive_cap)
    throw CapExceeded("structured enumeration requires " + std::to_string(prefix_total) +
                      " prefixes, cap is " + std::to_string(opts.naive_cap));

  const TypeWord seed = last.kind == RoundSpec::Kind::seeded ? last.word : TypeWord{};
  const bool last_searchable =
      last.kind == RoundSpec::Kind::free || last.kind == RoundSpec::Kind::seeded;

  std::optional<TypeSchedule> witness;
  prefix.for_each_schedule([&](const TypeSchedule& head) {
    const TypeWord phrase = compose_fold(head);
    if (last_searchable) {
      auto tail = detail::last_round_search(phrase, profile, last.width(), seed);
      if (tail) {
        TypeSchedule full = head;
        full.push_back(*tail);
        witness = full;
        return false;
      }
    } else {
      const TypeWord tail = last.instantiate(0);
      if (ChainAutomaton(compose_pair(phrase, tail)).accepts(profile)) {
        TypeSchedule full = head;
        full.push_back(tail);
        witness = full;
        return false;
      }
    }
    return true;
  });
  return witness;
}

inline std::optional<TypeSchedule> decide_feasibility(const ChainQuestion& q,
                                                      DecideStrategy strategy,
                                                      const DecideOptions& opts = {}) {
  return decide_feasibility(q.profile, q.family, strategy, opts);
}

inline std::optional<TypeSchedule> decide_feasibility(const SortQuestion& q,
                                                      DecideStrategy strategy,
                                                      const DecideOptions& opts = {}) {
  return decide_feasibility(change_profile(q.perm), q.family, strategy, opts);
}

}  // namespace pileshuffle
