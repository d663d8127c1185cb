#pragma once

// Exhaustive verification of arrow-class claims: enumerate every chain in
// a factored family, run a word from a set of start states, and check an
// end predicate. Refuses (never samples) when the family exceeds the cap.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/algebra.hpp"
#include "pileshuffle/chain.hpp"
#include "pileshuffle/family.hpp"

namespace pileshuffle {

struct ArrowReport {
  bool passed = true;
  bool refused = false;
  long long cases = 0;
  std::string detail;  // first counterexample, or the refusal reason
};

namespace detail {

inline std::string schedule_text(const TypeSchedule& sched) {
  std::string out;
  for (size_t t = 0; t < sched.size(); ++t) {
    if (t) out.push_back('/');
    out += sched[t];
  }
  return out;
}

inline std::string trace_text(const ChainAutomaton& chain, int start, std::string_view word,
                              size_t max_symbols = 64) {
  if (word.size() > max_symbols)
    return "(trace omitted, word length " + std::to_string(word.size()) + ")";
  std::string out;
  for (int st : chain.trace(start, word)) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(st);
  }
  return out;
}

inline std::string counterexample_text(const TypeSchedule& sched, const ChainAutomaton& chain,
                                       int start, int end, std::string_view word) {
  return "schedule=" + schedule_text(sched) + " start=" + std::to_string(start) +
         " end=" + std::to_string(end) + " trace=" + trace_text(chain, start, word);
}

}  // namespace detail

/// starts fills the start-state list for the given chain; expected judges
/// the end state for each start. Every chain in the family is enumerated.
inline ArrowReport verify_arrow(
    const FactoredFamily& family, std::string_view word,
    const std::function<void(const ChainAutomaton&, const TypeSchedule&, std::vector<int>&)>&
        starts,
    const std::function<bool(const ChainAutomaton&, const TypeSchedule&, int start, int end)>&
        expected,
    long long chain_cap = 1LL << 20) {
  ArrowReport rep;
  const long long total = family.schedule_count();
  if (total > chain_cap) {
    rep.refused = true;
    rep.passed = false;
    rep.detail = "family has " + std::to_string(total) + " chains, cap is " +
                 std::to_string(chain_cap);
    return rep;
  }
  std::vector<int> start_states;
  family.for_each_schedule([&](const TypeSchedule& sched) {
    const ChainAutomaton chain(compose_fold(sched));
    start_states.clear();
    starts(chain, sched, start_states);
    for (int st : start_states) {
      const int end = chain.run(st, word);
      ++rep.cases;
      if (!expected(chain, sched, st, end)) {
        rep.passed = false;
        rep.detail = detail::counterexample_text(sched, chain, st, end, word);
        return false;
      }
    }
    return true;
  });
  return rep;
}

}  // namespace pileshuffle
