#pragma once

#include <stdexcept>
#include <string>

namespace pileshuffle {

/// Raised when an operation's input violates its stated contract
/// (out-of-range pile index, width mismatch, and the like).
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised on malformed textual input (permutations, profiles, DIMACS).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured cap. The
/// message carries the count that would have been required.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pileshuffle
