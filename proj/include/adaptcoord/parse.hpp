#pragma once

#include "adaptcoord/bipoly.hpp"

#include <string>

namespace adaptcoord {

// Grammar (whitespace and newlines ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?        exponent must be a non-negative integer
//   primary := NUMBER | VARIABLE | '(' expr ')'
// NUMBER is "p" or "p/q"; VARIABLE is x1, x2 or the aliases x, y.
// Errors are ParseError with a 1-based line and column.
BiPoly parse_polynomial(const std::string& src);

} // namespace adaptcoord
