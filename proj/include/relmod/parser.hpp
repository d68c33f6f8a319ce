#pragma once

#include <stdexcept>
#include <string>

#include "relmod/formula.hpp"

namespace relmod {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// Grammar:
//   sentence := quant* body
//   quant    := ("forall" | "exists") IDENT
//   body     := biconditional over "&" "|" "~" "->" "<->" with parentheses
//   atom     := IDENT "(" IDENT ("," IDENT)* ")" | IDENT "=" IDENT | IDENT "~" IDENT
// "x ~ y" is sugar for E(x, y). Implications are normalized into ~/&/|.
// Rejects shadowed prefix variables, unbound matrix variables, and
// quantifiers inside the body.
Formula parse_formula(const std::string& text);

}  // namespace relmod
