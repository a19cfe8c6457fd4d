#pragma once

// Surface syntax: parsing rational combinations of bracketed terms and
// printing monomials, words and polynomials.
//
//   expr   := ['+'|'-'] tensor (('+'|'-') tensor)*
//   tensor := term ('(x)' term)*          a (x) b  is  a*P(b)
//   term   := power ('*' power)*
//   power  := atom ('^' nat)?
//   atom   := var deriv? | int ['/' nat] | 'd(' expr ')' | 'P(' expr ')' | '(' expr ')'
//   deriv  := "'"+ | '^(' nat ')'

#include <string>
#include <string_view>

#include "idnf/operated.hpp"

namespace idnf {

enum class OutputFormat { Tensor, Operated };

/// Throws ParseError on malformed text, unknown variables, or derivative
/// orders beyond `order`.
TermPoly parse_expression(std::string_view text, const VarTable& vars,
                          const TruncationOrder& order);

/// Variables outside the table print as v<index>.
std::string format_letter(DiffVar x, const VarTable& vars = VarTable());
std::string format_monomial(const CommMonomial& u, const VarTable& vars = VarTable());
std::string format_word(const TensorWord& w, const VarTable& vars = VarTable(),
                        OutputFormat f = OutputFormat::Tensor);
std::string format_term(const BracketedTerm& t, const VarTable& vars = VarTable());

/// Terms in descending order; "0" for the zero element.
std::string format_poly(const DiffPoly& p, const VarTable& vars = VarTable());
std::string format_tensor(const TensorPoly& p, const VarTable& vars = VarTable(),
                          OutputFormat f = OutputFormat::Tensor);
std::string format_terms(const TermPoly& p, const VarTable& vars = VarTable());

}  // namespace idnf
