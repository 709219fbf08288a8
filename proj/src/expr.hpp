#pragma once

#include "amalgrade/polynomial.hpp"

#include "lexer.hpp"

namespace amalgrade::detail {

// Parses one polynomial expression and stops at the first token that cannot
// extend it (',' ')' ';' keywords...), leaving that token for the caller.
Polynomial parse_poly_expr(Lexer& lx, const PolyRingPtr& ring);

} // namespace amalgrade::detail
