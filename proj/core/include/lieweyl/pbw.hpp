#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/series.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

// Element of U(g) in PBW normal form; the exponent vector e stands for the
// ordered monomial X1^e1 ... Xn^en.
struct PbwElement {
  SparsePoly poly;

  PbwElement() = default;
  explicit PbwElement(SparsePoly p) : poly(std::move(p)) {}
  static PbwElement one(int n) { return PbwElement(SparsePoly::constant(n, 1)); }
  static PbwElement generator(int n, int i) { return PbwElement(SparsePoly::variable(n, i)); }

  int n() const { return poly.nvars(); }
  int degree() const { return poly.degree(); }
  bool operator==(const PbwElement& o) const { return poly == o.poly; }
  PbwElement& operator+=(const PbwElement& o) {
    poly += o.poly;
    return *this;
  }
  PbwElement& operator-=(const PbwElement& o) {
    poly -= o.poly;
    return *this;
  }
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(const Rational& c, PbwElement a) {
    a.poly *= c;
    return a;
  }

  std::string render() const;
};

// Straightening engine for one Lie algebra. Caches partial results, so an
// instance must not be shared between threads.
class Envelope {
 public:
  explicit Envelope(LieAlgebra L);

  const LieAlgebra& algebra() const { return L_; }
  int n() const { return L_.dim(); }

  PbwElement mul(const PbwElement& a, const PbwElement& b) const;
  PbwElement left_mul_generator(int i, const PbwElement& u) const;
  // Product of the generators X_{w0} X_{w1} ... in normal form.
  PbwElement word(const std::vector<int>& letters) const;
  // Full symmetrization of each monomial.
  PbwElement coexp_xi(const Polynomial& f) const;

 private:
  SparsePoly left_mul_monomial(int i, const Monomial& m) const;

  LieAlgebra L_;
  mutable std::map<std::pair<int, Monomial>, SparsePoly> memo_;
};

// theta: U(g) -> S(g), u -> u^phi(1) through the Weyl realization.
class Realization {
 public:
  Realization(const LieAlgebra& L, SeriesMatrix phi);

  const SeriesMatrix& phi() const { return phi_; }
  const WeylOperator& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  Polynomial theta(const PbwElement& u) const;

 private:
  Polynomial theta_monomial(const Monomial& m) const;

  SeriesMatrix phi_;
  std::vector<WeylOperator> gens_;
  mutable std::map<Monomial, Polynomial> memo_;
};

// Deformed derivatives on U(g) defined by d^mu(X_nu f) = phi^mu_nu(d)(f) + X_nu d^mu(f).
class DeformedCalculus {
 public:
  DeformedCalculus(const Envelope& env, SeriesMatrix phi);

  const Envelope& envelope() const { return env_; }
  PbwElement partial(int mu, const PbwElement& u) const;
  // d^a applied to u (the deformed partials commute).
  PbwElement partial_power(const Monomial& a, const PbwElement& u) const;
  // s(d) applied to u; terms of s above the degree of u act as zero.
  PbwElement evaluate(const SparsePoly& s, const PbwElement& u) const;

 private:
  const SparsePoly& partial_monomial(int mu, const Monomial& m) const;

  const Envelope& env_;
  SeriesMatrix phi_;
  mutable std::map<std::pair<int, Monomial>, SparsePoly> memo_;
};

PbwElement pbw_mul(const LieAlgebra& L, const PbwElement& a, const PbwElement& b);
PbwElement coexp_xi(const LieAlgebra& L, const Polynomial& f);
Polynomial xi_inverse(const LieAlgebra& L, const SeriesMatrix& phi, const PbwElement& u);
PbwElement deformed_partial(const LieAlgebra& L, const SeriesMatrix& phi, int mu, const PbwElement& u);
PbwElement evaluate_series_at_deformed(const LieAlgebra& L, const SeriesMatrix& phi, const TruncatedSeries& s,
                                       const PbwElement& u);

// f * g = xi^{-1}(xi(f) xi(g)).
class PbwStar {
 public:
  PbwStar(const LieAlgebra& L, int cutoff);
  Polynomial star(const Polynomial& f, const Polynomial& g) const;
  const Envelope& envelope() const { return env_; }
  const Realization& realization() const { return real_; }

 private:
  Envelope env_;
  Realization real_;
};

Polynomial star_pbw(const LieAlgebra& L, const SeriesMatrix& phi, const Polynomial& f, const Polynomial& g);

}  // namespace lieweyl
