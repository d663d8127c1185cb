#pragma once

// Factored schedule families: per-round products of fixed words, free
// windows, powers of a fixed word, and seeded rounds (fixed prefix plus a
// free tail). Text grammar, rounds separated by '/':
//   qqqqss      fixed word
//   A6          free round of width 6
//   qqqqss^3    fixed word repeated 3 times (one round of width 18)
//   qs+A2       seeded: prefix qs, then 2 free piles
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/errors.hpp"
#include "pileshuffle/shuffle.hpp"

namespace pileshuffle {

struct RoundSpec {
  enum class Kind { fixed, free, power, seeded };
  Kind kind = Kind::fixed;
  TypeWord word;       // fixed word, power base, or seeded prefix
  int free_width = 0;  // free/seeded tail width
  int repeat = 1;      // power exponent

  static RoundSpec Fixed(TypeWord w) {
    require_type_word(w);
    return {Kind::fixed, std::move(w), 0, 1};
  }
  static RoundSpec Free(int width) {
    if (width < 1) throw ContractViolation("free round width must be >= 1");
    return {Kind::free, {}, width, 1};
  }
  static RoundSpec Power(TypeWord w, int k) {
    require_type_word(w);
    if (k < 1) throw ContractViolation("power exponent must be >= 1");
    return {Kind::power, std::move(w), 0, k};
  }
  static RoundSpec Seeded(TypeWord prefix, int tail) {
    require_type_word(prefix);
    if (tail < 1) throw ContractViolation("seeded tail width must be >= 1");
    return {Kind::seeded, std::move(prefix), tail, 1};
  }

  int width() const {
    switch (kind) {
      case Kind::fixed: return static_cast<int>(word.size());
      case Kind::free: return free_width;
      case Kind::power: return static_cast<int>(word.size()) * repeat;
      case Kind::seeded: return static_cast<int>(word.size()) + free_width;
    }
    return 0;
  }

  int free_bits() const {
    return kind == Kind::free || kind == Kind::seeded ? free_width : 0;
  }

  /// Number of concrete words this round can take.
  long long count() const {
    const int b = free_bits();
    return b >= 62 ? std::numeric_limits<long long>::max() : (1LL << b);
  }

  /// idx selects the free piles, low bit = leftmost free pile, 0 = queue.
  TypeWord instantiate(std::uint64_t idx) const {
    TypeWord out;
    switch (kind) {
      case Kind::fixed: return word;
      case Kind::power:
        out.reserve(word.size() * static_cast<size_t>(repeat));
        for (int i = 0; i < repeat; ++i) out += word;
        return out;
      case Kind::seeded: out = word; [[fallthrough]];
      case Kind::free:
        for (int i = 0; i < free_width; ++i)
          out.push_back((idx >> i) & 1 ? 's' : 'q');
        return out;
    }
    return out;
  }

  std::string spec_text() const {
    switch (kind) {
      case Kind::fixed: return word;
      case Kind::free: return "A" + std::to_string(free_width);
      case Kind::power: return word + "^" + std::to_string(repeat);
      case Kind::seeded: return word + "+A" + std::to_string(free_width);
    }
    return {};
  }
};

struct FactoredFamily {
  std::vector<RoundSpec> rounds;

  /// Total number of concrete schedules, saturating at LLONG_MAX.
  long long schedule_count() const {
    long long total = 1;
    for (const auto& r : rounds) {
      const long long c = r.count();
      if (total > std::numeric_limits<long long>::max() / c)
        return std::numeric_limits<long long>::max();
      total *= c;
    }
    return total;
  }

  TypeSchedule instantiate(const std::vector<std::uint64_t>& idxs) const {
    if (idxs.size() != rounds.size()) throw ContractViolation("index count mismatch");
    TypeSchedule out;
    out.reserve(rounds.size());
    for (size_t t = 0; t < rounds.size(); ++t) out.push_back(rounds[t].instantiate(idxs[t]));
    return out;
  }

  /// Odometer over every concrete schedule; fn returning false stops early.
  /// Returns false if the visit was stopped.
  bool for_each_schedule(const std::function<bool(const TypeSchedule&)>& fn) const {
    std::vector<std::uint64_t> idx(rounds.size(), 0);
    for (;;) {
      if (!fn(instantiate(idx))) return false;
      size_t t = 0;
      for (; t < rounds.size(); ++t) {
        if (static_cast<long long>(++idx[t]) < rounds[t].count()) break;
        idx[t] = 0;
      }
      if (t == rounds.size()) return true;
    }
  }

  std::string spec_text() const {
    std::string out;
    for (size_t t = 0; t < rounds.size(); ++t) {
      if (t) out.push_back('/');
      out += rounds[t].spec_text();
    }
    return out;
  }
};

inline RoundSpec parse_round_spec(std::string_view text) try {
  if (text.empty()) throw ParseError("empty round spec");
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw ParseError("missing integer in round spec");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("bad integer in round spec");
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw ParseError("round width too large");
    }
    return v;
  };
  if (text[0] == 'A') return RoundSpec::Free(parse_int(text.substr(1)));
  if (auto plus = text.find("+A"); plus != std::string_view::npos) {
    TypeWord prefix{text.substr(0, plus)};
    if (!is_type_word(prefix) || prefix.empty()) throw ParseError("bad seeded prefix");
    return RoundSpec::Seeded(std::move(prefix), parse_int(text.substr(plus + 2)));
  }
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    TypeWord base{text.substr(0, caret)};
    if (!is_type_word(base) || base.empty()) throw ParseError("bad power base");
    return RoundSpec::Power(std::move(base), parse_int(text.substr(caret + 1)));
  }
  TypeWord w{text};
  if (!is_type_word(w)) throw ParseError("round spec must be over {q,s}");
  return RoundSpec::Fixed(std::move(w));
} catch (const ContractViolation& e) {
  throw ParseError(e.what());
}

inline FactoredFamily parse_family(std::string_view text) {
  FactoredFamily fam;
  size_t start = 0;
  while (start <= text.size()) {
    size_t sep = text.find('/', start);
    if (sep == std::string_view::npos) sep = text.size();
    fam.rounds.push_back(parse_round_spec(text.substr(start, sep - start)));
    start = sep + 1;
  }
  return fam;
}

}  // namespace pileshuffle
