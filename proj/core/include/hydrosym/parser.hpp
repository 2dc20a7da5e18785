#pragma once

#include <hydrosym/symexpr.hpp>

#include <map>
#include <string>

namespace hydrosym {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Infix expression grammar over registered symbols. Binding a name maps it to
// a rational literal before atom resolution, which is how parameterized
// catalog entries (exponents in a, b, k, eps) are instantiated.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('-'|'+')* postfix
//   postfix := primary ('^' exponent)?      exponent folds to a rational
//   primary := integer | name | name '(' expr {',' expr} ')' | '(' expr ')'
//
// Functions: exp, ln, sin, cos, tan, arctan, sqrt(u) = u^(1/2), pow(u, q).
// Jet atoms are written field_suffix with suffix a concatenation of
// independent-variable names, e.g. R_x, xi_xx, F_sigmasigma.
SymExpr parse_expr(const std::string& text,
                   const std::map<std::string, Rational>& bindings = {});

// Parses an expression that must reduce to a rational constant.
Rational parse_rational(const std::string& text,
                        const std::map<std::string, Rational>& bindings = {});

}  // namespace hydrosym
