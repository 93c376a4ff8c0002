#pragma once

// Recursive-descent parsers for operator and polynomial expressions.
//
// Operator grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-') factor | primary ('^' nat)*
//   primary := nat | 'x'K | 'd'K | 'E' | 'inv' '(' expr ')' | '(' expr ')'
// with K a 1-based variable index bounded by nvars. '*' is operator
// composition (order matters). '/' right-multiplies by the inverse of an
// order-zero factor with invertible coefficient (so integer fractions like
// 3/2 work too). 'E' is the normal-ordered exponential truncation at the
// ambient precision; 'inv(f)' inverts a multiplication operator.
//
// Polynomial expressions use the same surface syntax restricted to named
// variables, '+', '-', '*', '^' and integer constants; '/' is allowed with a
// constant divisor.

#include "pdo/diffop.hpp"

#include <string>
#include <vector>

namespace pdo {

struct OpGrammar {
    int nvars = 2;
    int precision = 8;
};

DiffOp parse_op(const std::string& text, const OpGrammar& g);

Poly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace pdo
