#pragma once

#include <string>

#include "lieweyl/polynomial.hpp"
#include "lieweyl/series.hpp"

namespace lieweyl {

// Normal-ordered element sum c x^a d^b of the Weyl algebra, exact in x and
// truncated at d-degree `cutoff`. Stored as a polynomial in 2n variables,
// x1..xn first, then d1..dn.
class WeylOperator {
 public:
  WeylOperator() = default;
  WeylOperator(int n, int cutoff);
  WeylOperator(int n, int cutoff, SparsePoly p);

  static WeylOperator x(int n, int cutoff, int i);
  static WeylOperator d(int n, int cutoff, int i);
  static WeylOperator constant(int n, int cutoff, const Rational& c);
  static WeylOperator from_polynomial(const Polynomial& f, int cutoff);
  static WeylOperator from_series(const TruncatedSeries& s);

  int n() const { return n_; }
  int cutoff() const { return cutoff_; }
  const SparsePoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Rational& c);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Rational& c) { return a *= c; }
  bool operator==(const WeylOperator& o) const { return n_ == o.n_ && cutoff_ == o.cutoff_ && poly_ == o.poly_; }

  WeylOperator with_cutoff(int cutoff) const;

  std::string render() const;

 private:
  int n_ = 0;
  int cutoff_ = 0;
  SparsePoly poly_;
};

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b);
WeylOperator weyl_commutator(const WeylOperator& a, const WeylOperator& b);

// Fock action on polynomials: x multiplies, d differentiates.
Polynomial apply(const WeylOperator& A, const Polynomial& f);

// Action on the block of variables [offset, offset + n) of a larger polynomial.
SparsePoly apply_on_block(const WeylOperator& A, const SparsePoly& F, int offset);

// A applied to 1.
Polynomial vacuum(const WeylOperator& A);

// x_b phi^b_i.
WeylOperator realize_generator(const SeriesMatrix& phi, int i);

}  // namespace lieweyl
