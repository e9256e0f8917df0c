#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gawb/poly.hpp"
#include "gawb/term_order.hpp"

namespace gawb {

/// Parses the polynomial grammar:
///
///     expr   := term (('+' | '-') term)*
///     term   := unary ('*' unary)*
///     unary  := ('+' | '-') unary | power
///     power  := atom ('^' ['+' | '-'] integer)?
///     atom   := integer ('/' integer)? | identifier | '(' expr ')'
///
/// Every identifier must appear in `declared`. Negative powers are accepted
/// only for single-term bases. Throws ParseError with the byte offset.
Poly parse_poly(std::string_view text, const std::vector<std::string>& declared);

/// Same grammar, but every identifier is accepted.
Poly parse_poly(std::string_view text);

/// Identifiers occurring in `text`, in first-appearance order.
std::vector<std::string> identifiers_in(std::string_view text);

/// Canonical rendering: terms in decreasing `order`, variables inside a term
/// in priority order, coefficients in lowest terms, e.g. "x^2*v - y^2*u - 1".
std::string to_string(const Poly& p, const TermOrder& order);
/// Renders with degrevlex and alphabetical variable priority.
std::string to_string(const Poly& p);

}  // namespace gawb
