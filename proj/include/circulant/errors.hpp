#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circ {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a documented contract (mismatched moduli, invalid arguments).
struct usage_error : error {
  using error::error;
};

// Input lies outside the mathematical domain of the operation.
struct domain_error : error {
  using error::error;
};

// A configured size or budget bound was exceeded.
struct resource_error : error {
  using error::error;
};

// Kernel decomposition was requested for a modulus with three or more
// distinct prime factors, which this library does not handle.
struct unsupported_modulus_error : error {
  using error::error;
};

// Checked machine arithmetic would have wrapped.
struct overflow_error : error {
  using error::error;
};

// Malformed graph text. `position` is the byte offset of the offending token.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// A hypothesis of a checked statement does not hold; `clause` names it.
struct precondition_error : usage_error {
  explicit precondition_error(const std::string& violated)
      : usage_error("hypothesis violated: " + violated), clause(violated) {}
  std::string clause;
};

}  // namespace circ
