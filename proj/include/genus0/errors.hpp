#pragma once

#include <stdexcept>
#include <string>

namespace genus0 {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; `pos` is the byte offset of the bad token.
struct parse_error : error {
  std::size_t pos;
  std::string bare;  // message without the position suffix
  parse_error(const std::string& what, std::size_t pos_)
      : error(what + " (at position " + std::to_string(pos_) + ")"),
        pos(pos_),
        bare(what) {}
};

// A configured work budget was exhausted (factoring, prime-element search).
// The decision pipeline degrades these to an UNKNOWN verdict.
struct budget_error : error {
  using error::error;
};

// An internal invariant failed: a bug, not bad input.
struct invariant_error : error {
  using error::error;
};

#define G0_CHECK(cond, msg)                                                   \
  do {                                                                        \
    if (!(cond))                                                              \
      throw ::genus0::invariant_error(std::string("invariant violated: ") + (msg)); \
  } while (0)

}  // namespace genus0
