#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "holochern/rational_function.hpp"

namespace holochern {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | '+' unary | power
//   power := atom ('^' exponent)?
//   exponent := ['-'] int | '(' ['-'] int ')'
//   atom  := int | 'i' | identifier | '(' expr ')'
// Identifiers must be listed in vars; 'i' is the imaginary unit.
RationalFunction parse_expr(const std::string& text, const std::vector<std::string>& vars);

}  // namespace holochern
