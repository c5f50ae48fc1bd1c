#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irr/mpoly.hpp"

namespace irr {

/// Parses a polynomial expression.
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := rational | variable | '(' expr ')'
/// Rational literals are `digits` or `digits/digits`. Only the listed
/// variables are accepted. Throws ParseError with the offending position.
MPoly parse_poly(std::string_view text, const std::vector<Var>& allowed = {Var::x, Var::y});

}  // namespace irr
