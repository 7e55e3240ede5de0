#pragma once

#include "singulocus/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace singulocus {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), message(what), offset(offset) {}
  std::string message;
  std::size_t offset;
};

/// Parses `x^2*y - 3/2*z`-style text over the ring's declared variables.
/// `*` may be omitted between factors; parentheses and integer powers of
/// parenthesized expressions are accepted.
Poly parse_poly(const PolyRingPtr& ring, std::string_view text);

}  // namespace singulocus
