#pragma once

// Chain DFAs: one state per pile plus a terminal sink. States are 0-based
// (start = 0, accepting = 0..m-1, sink = m); coordinate helpers group
// states as beat \ measure \ phrase.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/errors.hpp"
#include "pileshuffle/perm.hpp"
#include "pileshuffle/shuffle.hpp"

namespace pileshuffle {

class ChainAutomaton {
 public:
  explicit ChainAutomaton(TypeWord types) : types_(std::move(types)) {
    require_type_word(types_);
  }

  const TypeWord& types() const { return types_; }
  int num_states() const { return static_cast<int>(types_.size()) + 1; }
  int terminal() const { return static_cast<int>(types_.size()); }

  /// Queue states self-loop on 'a' and advance on 'd'; stack states the
  /// reverse; the sink absorbs.
  int step(int state, char symbol) const {
    if (state < 0 || state > terminal()) throw ContractViolation("state out of range");
    if (symbol != 'a' && symbol != 'd') throw ContractViolation("symbol must be a or d");
    if (state == terminal()) return state;
    const bool is_stack = types_[static_cast<size_t>(state)] == 's';
    return state + ((symbol == 'a') == is_stack ? 1 : 0);
  }

  int run(int start, std::string_view word) const {
    int st = start;
    for (char c : word) st = step(st, c);
    return st;
  }

  /// States visited, including the start; length = |word| + 1.
  std::vector<int> trace(int start, std::string_view word) const {
    std::vector<int> out{start};
    out.reserve(word.size() + 1);
    int st = start;
    for (char c : word) out.push_back(st = step(st, c));
    return out;
  }

  bool accepts(std::string_view profile) const { return run(0, profile) < terminal(); }

 private:
  TypeWord types_;
};

inline ChainAutomaton build_chain(const TypeWord& types) { return ChainAutomaton(types); }

/// beat \ measure \ phrase coordinates -> flat state index, all 0-based.
inline int flat_state(std::span<const int> coords, std::span<const int> widths) {
  if (coords.size() != widths.size()) throw ContractViolation("coordinate rank mismatch");
  int flat = 0;
  for (size_t i = coords.size(); i-- > 0;) {
    if (coords[i] < 0 || coords[i] >= widths[i])
      throw ContractViolation("coordinate out of range");
    flat = coords[i] + widths[i] * flat;
  }
  return flat;
}

inline std::vector<int> state_coordinates(int flat, std::span<const int> widths) {
  std::vector<int> out(widths.size());
  for (size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] < 1) throw ContractViolation("width must be >= 1");
    out[i] = flat % widths[i];
    flat /= widths[i];
  }
  if (flat != 0) throw ContractViolation("flat index out of range");
  return out;
}

}  // namespace pileshuffle
