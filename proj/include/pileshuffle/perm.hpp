#pragma once

// Permutations in the embedding convention: label s sits at position
// mapping[s-1]. The one-line "sequence" notation is the inverse mapping.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pileshuffle/errors.hpp"

namespace pileshuffle {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int n = static_cast<int>(mapping_.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : mapping_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
        throw ContractViolation("permutation mapping is not a bijection of [n]");
      seen[static_cast<size_t>(v) - 1] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> m(static_cast<size_t>(n));
    for (int s = 1; s <= n; ++s) m[static_cast<size_t>(s) - 1] = s;
    return Permutation(std::move(m));
  }

  int size() const { return static_cast<int>(mapping_.size()); }

  /// Position of label s (1-based).
  int operator()(int s) const { return mapping_[static_cast<size_t>(s) - 1]; }

  const std::vector<int>& mapping() const { return mapping_; }

  Permutation inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int s = 1; s <= size(); ++s) inv[static_cast<size_t>((*this)(s)) - 1] = s;
    return Permutation(std::move(inv));
  }

  /// One-line sequence: the label occupying each position in order.
  std::vector<int> sequence() const { return inverse().mapping(); }

  bool is_identity() const {
    for (int s = 1; s <= size(); ++s)
      if ((*this)(s) != s) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.mapping_ == b.mapping_;
  }

 private:
  std::vector<int> mapping_;
};

inline bool is_change_profile(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'd'; });
}

/// Delta(pi): symbol s is 'a' iff pi(s+1) > pi(s).
inline std::string change_profile(const Permutation& perm) {
  std::string out;
  out.reserve(perm.size() > 0 ? static_cast<size_t>(perm.size()) - 1 : 0);
  for (int s = 1; s + 1 <= perm.size(); ++s)
    out.push_back(perm(s + 1) > perm(s) ? 'a' : 'd');
  return out;
}

/// Canonical permutation with the given change profile. Split labels into
/// maximal descending runs; positions are handed out run by run, each run's
/// block reversed so adjacent labels inside it descend.
inline Permutation realize_permutation(std::string_view profile) {
  if (!is_change_profile(profile))
    throw ContractViolation("change profile must be over {a,d}");
  const int n = static_cast<int>(profile.size()) + 1;
  std::vector<int> mapping(static_cast<size_t>(n));
  int next_pos = 1;
  int run_start = 1;
  for (int s = 1; s <= n; ++s) {
    if (s == n || profile[static_cast<size_t>(s) - 1] == 'a') {
      // labels run_start..s form a maximal descending block
      for (int t = s; t >= run_start; --t) mapping[static_cast<size_t>(t) - 1] = next_pos++;
      run_start = s + 1;
    }
  }
  return Permutation(std::move(mapping));
}

enum class PermConvention { embedding, sequence };

/// Whitespace-separated labels; a single all-digit token is split per
/// character so "456123" reads as the length-6 sequence.
inline Permutation parse_permutation(std::string_view text, PermConvention conv) {
  std::vector<int> vals;
  std::istringstream in{std::string(text)};
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.size() == 1 && toks[0].size() > 1 &&
      std::all_of(toks[0].begin(), toks[0].end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    for (char c : toks[0]) vals.push_back(c - '0');
  } else {
    for (const auto& t : toks) {
      try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        vals.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad permutation token: " + t);
      }
    }
  }
  try {
    Permutation p{std::move(vals)};
    return conv == PermConvention::embedding ? p : p.inverse();
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_string(const Permutation& perm, PermConvention conv) {
  const std::vector<int> row =
      conv == PermConvention::embedding ? perm.mapping() : perm.sequence();
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(row[i]);
  }
  return out;
}

}  // namespace pileshuffle
