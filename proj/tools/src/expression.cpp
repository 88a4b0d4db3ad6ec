#include "lieweyl_cli/expression.hpp"

#include <fmt/format.h>

#include <cctype>

namespace lieweyl::cli {

ParseError::ParseError(std::size_t position, std::string expected, const std::string& message)
    : std::runtime_error(fmt::format("at position {}: {}", position, message)),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, "operator or end of input", fmt::format("unexpected '{}'", s_[pos_]));
    return e;
  }

 private:
  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  std::string found() const { return pos_ < s_.size() ? fmt::format("'{}'", s_[pos_]) : "end of input"; }

  std::string digits(const char* expected) {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, expected, fmt::format("expected {}, found {}", expected, found()));
    return s_.substr(start, pos_ - start);
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = at;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t at, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto e = node(k, at);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (true) {
      if (peek('+')) {
        std::size_t at = pos_++;
        lhs = binary(Expr::Kind::Add, at, std::move(lhs), term());
      } else if (peek('-')) {
        std::size_t at = pos_++;
        lhs = binary(Expr::Kind::Subtract, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (peek('*')) {
      std::size_t at = pos_++;
      lhs = binary(Expr::Kind::Multiply, at, std::move(lhs), unary());
    }
    return lhs;
  }

  std::unique_ptr<Expr> unary() {
    if (peek('-')) {
      auto e = node(Expr::Kind::Negate, pos_++);
      e->args.push_back(unary());
      return e;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    if (!peek('^')) return base;
    std::size_t at = pos_++;
    skip();
    std::size_t exp_at = pos_;
    std::string d = digits("nonnegative integer exponent");
    if (d.size() > 4 || std::stoi(d) > kMaxExponent)
      throw ParseError(exp_at, "exponent <= " + std::to_string(kMaxExponent), "exponent overflow: " + d);
    auto e = node(Expr::Kind::Power, at);
    e->exponent = std::stoi(d);
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> primary() {
    skip();
    std::size_t at = pos_;
    if (peek('(')) {
      ++pos_;
      auto e = expr();
      if (!peek(')')) throw ParseError(pos_, "')'", fmt::format("expected ')', found {}", found()));
      ++pos_;
      return e;
    }
    if (peek('x')) {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(pos_, "variable index", fmt::format("expected variable index, found {}", found()));
      std::string d = digits("variable index");
      int idx = d.size() > 3 ? 0 : std::stoi(d);
      if (idx < 1 || idx > n_)
        throw ParseError(at, fmt::format("variable x1..x{}", n_), fmt::format("unknown variable x{}", d));
      auto e = node(Expr::Kind::Variable, at);
      e->variable = idx - 1;
      return e;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits("integer");
      std::string den = "1";
      if (peek('/')) {
        ++pos_;
        skip();
        std::size_t den_at = pos_;
        den = digits("denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError(den_at, "nonzero denominator", "zero denominator");
      }
      auto e = node(Expr::Kind::Literal, at);
      e->value = Rational(mpz_class(num), mpz_class(den));
      e->value.canonicalize();
      return e;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(at, fmt::format("variable x1..x{}", n_), fmt::format("unknown variable starting with '{}'", s_[pos_]));
    throw ParseError(pos_, "number, variable or '('", fmt::format("expected number, variable or '(', found {}", found()));
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expression(const std::string& text, int n) { return Parser(text, n).run(); }

Polynomial evaluate(const Expr& e, int n) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return Polynomial::constant(n, e.value);
    case Expr::Kind::Variable:
      return x_var(n, e.variable);
    case Expr::Kind::Negate:
      return -evaluate(*e.args[0], n);
    case Expr::Kind::Add:
      return evaluate(*e.args[0], n) + evaluate(*e.args[1], n);
    case Expr::Kind::Subtract:
      return evaluate(*e.args[0], n) - evaluate(*e.args[1], n);
    case Expr::Kind::Multiply:
      try {
        return evaluate(*e.args[0], n) * evaluate(*e.args[1], n);
      } catch (const std::overflow_error&) {
        throw ParseError(e.position, "smaller degree", "exponent overflow in product");
      }
    case Expr::Kind::Power: {
      Polynomial base = evaluate(*e.args[0], n);
      Polynomial out = Polynomial::constant(n, 1);
      try {
        for (int i = 0; i < e.exponent; ++i) out *= base;
      } catch (const std::overflow_error&) {
        throw ParseError(e.position, "smaller degree", "exponent overflow in power");
      }
      return out;
    }
  }
  return Polynomial(n);
}

Polynomial parse_polynomial(const std::string& text, int n) { return evaluate(*parse_expression(text, n), n); }

}  // namespace lieweyl::cli
