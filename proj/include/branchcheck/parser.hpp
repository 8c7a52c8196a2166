#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "branchcheck/polynomial.hpp"
#include "branchcheck/variables.hpp"

namespace branchcheck {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}

    // Character offset into the source string.
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Parses an expression in the grammar
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := "(" expr ")" | var | number | "-" factor
//   number := int ("/" nat)?
// Multiplication is always explicit; exponents are nonnegative integer
// literals; "/" appears only inside rational constants.
Polynomial parse_polynomial(const std::string& src, VarSet allowed_vars);

}  // namespace branchcheck
