// Concrete syntax: a TPTP-FOF-style grammar.
//
//   formula := formula '<=>' formula | formula '=>' formula
//            | formula '|' formula   | formula '&' formula  | unary
//   unary   := '~' unary | ('!' | '?') '[' VAR (',' VAR)* ']' ':' unary
//            | '(' formula ')' | '$true' | '$false' | atom
//   atom    := functor [ '(' term (',' term)* ')' ] | term '=' term
//            | term '!=' term
//   term    := VAR | functor [ '(' term (',' term)* ')' ]
//
// Precedence from loosest: '<=>', '=>', '|', '&', then unary forms. '&' and
// '|' associate to the left, '=>' and '<=>' to the right; '=>' and '<=>'
// may not be chained with each other without parentheses. Variables start
// with an uppercase letter, functors and predicates with a lowercase one;
// both continue with letters, digits and '_'. A multi-variable binder is
// sugar for nested single binders, and 's != t' for '~s = t'.

#ifndef SENTCX_SYNTAX_HPP
#define SENTCX_SYNTAX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentcx/formula.hpp"

namespace sentcx {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected);

  /// 1-based position of the offending token.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Throws ParseError; never anything else for any input bytes.
Formula parse_formula(std::string_view text);

std::string print_term(const Term& t);

/// Inverse of parse_formula up to structure, with minimal parentheses.
std::string print_formula(const Formula& f);

/// "![X]: ?[Y]:" for a prefix; empty string for an empty prefix.
std::string print_prefix(
    std::span<const std::pair<Quantifier, std::string>> prefix);

}  // namespace sentcx

#endif  // SENTCX_SYNTAX_HPP
