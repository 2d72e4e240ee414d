#ifndef RESIDUA_PARSE_HPP
#define RESIDUA_PARSE_HPP

#include <string_view>

#include "residua/polynomial.hpp"

namespace residua {

// Grammar:
//   polynomial ::= ('+'|'-')? term (('+'|'-') term)*
//   term       ::= coeff | coeff '*' monomial | monomial
//   monomial   ::= var ('^' int)? ('*' var ('^' int)?)*
//   coeff      ::= int | int '/' uint
// Whitespace is insignificant; variable names match [A-Za-z][A-Za-z0-9_]*.
// Negative '^' exponents are accepted so that printed Laurent polynomials
// round-trip.
Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars);

} // namespace residua

#endif
