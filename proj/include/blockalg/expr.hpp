#pragma once

#include <string>
#include <string_view>

#include "blockalg/derivation.hpp"
#include "blockalg/errors.hpp"

namespace blockalg {

// Surface syntax (whitespace insignificant between tokens):
//
//   element  := term (('+' | '-') term)* ;
//   term     := (scalar '*')? basis | scalar ;
//   basis    := 'L' '[' integer ',' nonneg-integer ']' ;
//   scalar   := rational | '(' rational (('+'|'-') rational? 'i')? ')' ;
//   rational := integer ('/' positive-integer)? ;
//   spec     := 'ad' '(' element ')' (('+'|'-') (scalar '*'?)? 'd')?
//             | (scalar '*'?)? 'd' ;
//
// A bare scalar term must be 0 (there is no constant vector); a leading sign
// before the first term is accepted. Parsers consume the whole input and
// throw SyntaxError / DomainError with the byte offset of the failure.

Element parse_element(std::string_view text);
Scalar parse_scalar(std::string_view text);
BasisIndex parse_basis_index(std::string_view text);
InnerOuterDerivation parse_derivation(std::string_view text);

// Canonical forms: terms in ascending (alpha, i) order, fractions in lowest
// terms, minimal coefficient spelling. parse(format(v)) == v, and
// format(x) == format(y) iff x == y.
std::string format_rational(const Rational& r);
std::string format_scalar(const Scalar& s);
std::string format_basis_index(const BasisIndex& b);
std::string format_element(const Element& x);
std::string format_derivation(const InnerOuterDerivation& D);

}  // namespace blockalg
