#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieweyl/polynomial.hpp"

namespace lieweyl::cli {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' integer | '(' expr ')'
// Whitespace is ignored between tokens. Variables are x1..xn.
struct Expr {
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };
  Kind kind = Kind::Literal;
  std::size_t position = 0;
  Rational value;      // Literal
  int variable = 0;    // Variable, 0-based
  int exponent = 0;    // Power
  std::vector<std::unique_ptr<Expr>> args;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

inline constexpr int kMaxExponent = 64;

std::unique_ptr<Expr> parse_expression(const std::string& text, int n);
Polynomial evaluate(const Expr& e, int n);
Polynomial parse_polynomial(const std::string& text, int n);

}  // namespace lieweyl::cli
