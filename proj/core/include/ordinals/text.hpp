#pragma once

#include <cstddef>
#include <string>

#include "ordinals/cnf.hpp"
#include "ordinals/element.hpp"
#include "ordinals/expr.hpp"

namespace ord {

/// Thrown on malformed input; offset is the byte position of the failure and
/// expected describes the token set that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error(ErrorKind::ParseError,
              "at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Grammar:
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' factor)?          -- '^' right-associative
///   atom   := natural | 'w' | '(' expr ')'
/// '+' and '*' are left-associative; whitespace is insignificant.
Expr parse_expr(const std::string& text);

/// Right inverse of parse_expr with minimal parentheses.
std::string print_expr(const Expr& e);

/// Canonical CNF form: terms joined by " + ", each "w^(E)*c" with "w^1"
/// printed "w", finite exponents printed without parentheses, a w^0 term as
/// the bare coefficient, and coefficient 1 elided. Zero prints "0".
/// The output is also valid expression syntax denoting the same ordinal.
std::string print_cnf(const Cnf& c);

/// Element syntax: naturals print bare, Sum as "L:<e>"/"R:<e>", Prod as
/// "(<e1>,<e2>)", Exp as "[(a1,b1),...,(ak,bk)]".
std::string print_element(const Element& x);

/// Inverse of print_element (shape is validated separately against an
/// expression).
Element parse_element(const std::string& text);

}  // namespace ord
