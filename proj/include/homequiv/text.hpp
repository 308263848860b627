#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homequiv/hompoly.hpp"
#include "homequiv/scalar.hpp"

namespace homequiv {

// Polynomial text grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'i' | variable | '(' expr ')'
//
// Division is only allowed by a nonzero constant, so "3/2" and "x/(1+i)" are
// fine. Whitespace is insignificant. 'i' is the imaginary unit and cannot be
// used as a variable name.

/// Parses and expands `text`; the degree is inferred from the terms.
/// Throws ParseError (syntax, unknown variable) or NonHomogeneousError.
/// The zero polynomial parses as degree 0.
HomPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Parses a constant expression such as "3/2", "-i" or "(1+2*i)/5".
Scalar parse_scalar(std::string_view text);

/// Canonical text: terms in descending graded-lex order, no spaces,
/// e.g. "2*x^3+3*y^3" or "(1+2*i)*x^2-i*y^2". Re-parses to the same value.
std::string to_string(const HomPoly& f, const std::vector<std::string>& vars);

/// Appends one signed term "c*mono" to `out` using the same conventions as
/// to_string. `mono` may be empty for a constant term.
void append_term(std::string& out, const Scalar& c, const std::string& mono);

/// Identifiers other than 'i' appearing in `text`, in order of first use.
std::vector<std::string> collect_identifiers(std::string_view text);

/// Splits "x,y,z" into names; throws ParseError on an empty or invalid name.
std::vector<std::string> split_vars(std::string_view list);

}  // namespace homequiv
