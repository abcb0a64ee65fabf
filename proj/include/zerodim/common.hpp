#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zerodim {

// Domain errors: a well-formed request whose answer is "that is not allowed"
// (outside domain, malformed ordinal text, length mismatch, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Resource errors: an enumeration hit one of the configured caps. The theorems
// guarantee finiteness of everything we enumerate; the caps guard against
// bugs and mis-set contexts, and they fail loudly instead of truncating.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration caps. Every operation that enumerates (alphabets, refinement,
// class closure, witness searches) takes one of these explicitly.
struct Limits {
  std::size_t alphabet_elems = 20000;   // max elements of one alphabet level
  std::size_t cells = 200000;           // max cells in one clopen set
  std::size_t class_size = 20000;       // max E-class size
  std::size_t chain_nodes = 2000000;    // max chain-enumeration steps
  int depth = 64;                       // max cylinder depth
  int child_bound = 64;                 // max child index in witness searches
};

}  // namespace zerodim
