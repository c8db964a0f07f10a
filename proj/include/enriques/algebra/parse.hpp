#pragma once

#include <string_view>

#include "enriques/algebra/ratfunc.hpp"

namespace enriques::algebra {

/// Text grammar shared by every file format:
///
///   expr    := term (('+' | '-') term)*
///   term    := power (('*' | '/') power)*
///   power   := atom ('^' '-'? integer)?
///   atom    := integer | 'w' | name | '(' expr ')' | '-' atom
///   name    := [a-z][a-z0-9]*   (except the constant w)
///
/// Integers are read modulo 2; w is the field generator and requires a
/// field of degree >= 2. Errors throw ParseError with line and column.
RatFunc parse_ratfunc(std::string_view text, const FiniteField& field);

/// As parse_ratfunc, but the result must be a polynomial.
Poly parse_poly(std::string_view text, const FiniteField& field);

}  // namespace enriques::algebra
