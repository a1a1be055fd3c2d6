#ifndef RATDECOMP_PARSE_HPP
#define RATDECOMP_PARSE_HPP

#include <string>
#include <string_view>

#include "ratdecomp/ratfunc.hpp"

namespace ratdecomp {

// Parses an expression built from integers, the variable, the field
// generator, + - * / ^ and parentheses. Multiplication must be explicit;
// exponents are integer literals (negative allowed).
//
// Throws ParseError with code SyntaxError or UnknownSymbol, or Error with
// DivisionByZero.
RatFunc parse_expression(std::string_view text, const Field& field, const std::string& var = "x");

// As parse_expression, but the result must be a polynomial.
Poly parse_polynomial(std::string_view text, const Field& field, const std::string& var = "x");

} // namespace ratdecomp

#endif
