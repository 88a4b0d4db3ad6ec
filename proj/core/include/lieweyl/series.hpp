#pragma once

#include <string>
#include <vector>

#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/report.hpp"
#include "lieweyl/sparse_poly.hpp"

namespace lieweyl {

// Formal power series in d1..dn known exactly up to total degree `cutoff`.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int n, int cutoff);
  TruncatedSeries(SparsePoly p, int cutoff);

  static TruncatedSeries constant(int n, int cutoff, const Rational& c);
  static TruncatedSeries variable(int n, int cutoff, int i, const Rational& c = 1);

  int n() const { return poly_.nvars(); }
  int cutoff() const { return cutoff_; }
  const SparsePoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // d/d(d^rho); the result is only known up to cutoff - 1.
  TruncatedSeries partial(int rho) const;

  // Forgets information above a smaller cutoff.
  TruncatedSeries with_cutoff(int cutoff) const;

  bool operator==(const TruncatedSeries& o) const { return cutoff_ == o.cutoff_ && poly_ == o.poly_; }

  std::string render() const;

 private:
  int cutoff_ = 0;
  SparsePoly poly_;
};

std::string d_name(int i);

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(int n, int cutoff);
  static SeriesMatrix identity(int n, int cutoff);

  int n() const { return n_; }
  int cutoff() const { return cutoff_; }

  // Row index is the superscript: at(i, j) holds M^i_j.
  TruncatedSeries& at(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const TruncatedSeries& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }

  SeriesMatrix& operator+=(const SeriesMatrix& o);
  SeriesMatrix& operator*=(const Rational& c);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  bool operator==(const SeriesMatrix& o) const {
    return n_ == o.n_ && cutoff_ == o.cutoff_ && entries_ == o.entries_;
  }

  SeriesMatrix with_cutoff(int cutoff) const;

 private:
  int n_ = 0;
  int cutoff_ = 0;
  std::vector<TruncatedSeries> entries_;
};

// C-matrix: entry (i, j) is C^i_{jk} d^k.
SeriesMatrix c_matrix(const LieAlgebra& L, int cutoff);

// Symmetric-ordering realization matrix sum_N (-1)^N B_N/N! C^N.
SeriesMatrix phi_symmetric(const LieAlgebra& L, int cutoff);

// phi^l_j d_l phi^k_i - phi^l_i d_l phi^k_j = C^s_{ij} phi^k_s through degree cutoff - 1.
CheckReport verify_phi_equation(const LieAlgebra& L, const SeriesMatrix& phi);

}  // namespace lieweyl
