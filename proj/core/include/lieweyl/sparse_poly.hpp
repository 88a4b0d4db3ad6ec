#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/monomial.hpp"
#include "lieweyl/rational.hpp"

namespace lieweyl {

// Commutative polynomial in nvars variables with exact coefficients.
// Zero coefficients are never stored, so equality is map equality.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly variable(int nvars, int i, const Rational& c = 1);
  static SparsePoly term(int nvars, const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  // Highest total degree present, -1 for the zero polynomial.
  int degree() const;
  int degree(int lo, int hi) const;
  int min_degree(int lo, int hi) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly& operator*=(const SparsePoly& o);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Keeps terms whose degree in variables [lo, hi) is at most maxdeg.
  SparsePoly truncated(int maxdeg) const { return truncated(0, nvars_, maxdeg); }
  SparsePoly truncated(int lo, int hi, int maxdeg) const;
  SparsePoly homogeneous_part(int d) const { return homogeneous_part(0, nvars_, d); }
  SparsePoly homogeneous_part(int lo, int hi, int d) const;

  SparsePoly derivative(int var) const;

  // Same polynomial viewed in a larger ring, variable i becoming i + offset.
  SparsePoly embedded(int new_nvars, int offset) const;
  // Variables [lo, lo + count) renumbered to start at 0 in a ring of count variables;
  // other variables must be absent.
  SparsePoly extracted(int lo, int count) const;

  // Replaces every variable by a polynomial (all in one common ring).
  SparsePoly substitute(const std::vector<SparsePoly>& images, int maxdeg = -1) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

// Product keeping only terms whose degree in [lo, hi) does not exceed maxdeg.
SparsePoly multiply_truncated(const SparsePoly& a, const SparsePoly& b, int lo, int hi, int maxdeg);

// Integer power with the same truncation rule.
SparsePoly power_truncated(const SparsePoly& a, int k, int lo, int hi, int maxdeg);

enum class DegreeOrder { Ascending, Descending };

// Graded-lex rendering, e.g. "1 + 1/2*d3 - 1/12*d1^2". Within a degree, higher
// powers of lower-numbered variables come first.
std::string render(const SparsePoly& p, const std::function<std::string(int)>& var_name,
                   DegreeOrder order);

// Terms sorted in the rendering order.
std::vector<std::pair<Monomial, Rational>> graded_terms(const SparsePoly& p, DegreeOrder order);

std::string render_monomial(const Monomial& m, int nvars, const std::function<std::string(int)>& var_name);

}  // namespace lieweyl
