#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/feynman.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/report.hpp"

namespace lieweyl {

// One polynomial per upper index in 2n commuting variables k1..kn, q1..qn,
// with X = k.x and Y = q.x. Real convention: no imaginary unit.
using VectorPolynomial = LieVector;

std::string render_kq(const SparsePoly& p, int n);
std::string render_kq(const VectorPolynomial& v, int n);

VectorPolynomial kq_zero(int n);
VectorPolynomial k_vector(int n);
VectorPolynomial q_vector(int n);

// D_1..D_Nmax from the Dynkin recursion; result[N-1] = D_N.
std::vector<VectorPolynomial> dynkin_D(const LieAlgebra& L, int Nmax);

enum class HRoute { W, B };

// All bigraded pieces H_{w,b} with 1 <= w+b <= Pmax.
using BigradedH = std::map<std::pair<int, int>, VectorPolynomial>;
BigradedH bigraded_H(const LieAlgebra& L, int Pmax, HRoute route);

// Bidegree split of a homogeneous vector polynomial: k-degree w.
VectorPolynomial bidegree_part(const VectorPolynomial& v, int n, int w, int b);

// Truncated series in the free associative algebra on X (0) and Y (1).
class FreeSeries {
 public:
  using Word = std::vector<std::uint8_t>;
  explicit FreeSeries(int maxlen) : maxlen_(maxlen) {}
  static FreeSeries letter(int maxlen, int which);
  static FreeSeries one(int maxlen);

  int maxlen() const { return maxlen_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  void add(const Word& w, const Rational& c);

  FreeSeries& operator+=(const FreeSeries& o);
  FreeSeries& operator*=(const Rational& c);
  friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b);

  // exp of a series without constant term, and log(1 + s) likewise.
  FreeSeries exp() const;
  FreeSeries log1p() const;

 private:
  int maxlen_;
  std::map<Word, Rational> terms_;
};

// log(e^X e^Y) through word length P, projected by the Dynkin idempotent and
// evaluated in g; result[N-1] = D_N.
std::vector<VectorPolynomial> bch_oracle(const LieAlgebra& L, int P);

CheckReport linear_parts_check(const LieAlgebra& L, int Nmax);
CheckReport hausdorff_symmetry_check(const LieAlgebra& L, int P);
CheckReport hausdorff_diagonal_check(const LieAlgebra& L, int P);
CheckReport hausdorff_cross_check(const LieAlgebra& L, int P);
// Coproduct of each generator against D_P and H_{w,b}, both coproduct routes.
CheckReport compare_coproduct(const LieAlgebra& L, int P);

}  // namespace lieweyl
