#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/report.hpp"
#include "lieweyl/series.hpp"
#include "lieweyl/trees.hpp"

namespace lieweyl {

// Components ev(t)^mu_{a1..aw} of an ordered tree; each component is a
// homogeneous polynomial of degree b in d1..dn.
struct TensorSeries {
  int n = 0;
  int w = 0;
  int b = 0;
  // alpha tuple -> one polynomial per upper index mu.
  std::map<std::vector<int>, LieVector> components;

  SparsePoly component(int mu, const std::vector<int>& alpha) const;
};

// Element sum c d^L (x) d^R of S(g*) (x) S(g*) for one upper index mu, stored
// as a polynomial in 2n variables (left factor first), truncated at total degree cutoff.
class BigradedCoproduct {
 public:
  BigradedCoproduct() = default;
  BigradedCoproduct(int n, int mu, int cutoff);
  BigradedCoproduct(int n, int mu, int cutoff, SparsePoly p);

  int n() const { return n_; }
  int mu() const { return mu_; }
  int cutoff() const { return cutoff_; }
  const SparsePoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // Part of left degree w and right degree b.
  SparsePoly piece(int w, int b) const;
  // Part of total degree P.
  SparsePoly total_piece(int P) const;
  // Tensor flip.
  BigradedCoproduct swapped() const;

  BigradedCoproduct& operator+=(const BigradedCoproduct& o);
  bool operator==(const BigradedCoproduct& o) const {
    return n_ == o.n_ && mu_ == o.mu_ && cutoff_ == o.cutoff_ && poly_ == o.poly_;
  }

  // "1⊗d1 + d1⊗1 + 1/2*d2⊗d3 ..."
  std::string render() const;
  // One line per term: "mu=1 L=0,1,0 R=0,0,1 c=1/2".
  std::vector<std::string> structured() const;

 private:
  int n_ = 0;
  int mu_ = 0;
  int cutoff_ = 0;
  SparsePoly poly_;
};

std::string render_tensor(const SparsePoly& p, int n);

// Coproducts of all generators d^1..d^n.
using CoproductTable = std::vector<BigradedCoproduct>;

// Literal Feynman-rule evaluation with white node numbered l carrying e_{a_l}.
TensorSeries ev(const LieAlgebra& L, const OrderedTree& t);

// The tree contracted with d_L on every white node and d_R on every black
// leaf; component mu is (w! / #numerations) times the full evaluation.
LieVector tree_value(const LieAlgebra& L, const PlanarTree& t);

// (1/w!) d^{a1}...d^{aw} (x) ev(t)^mu_{a1..aw} for one numeration.
BigradedCoproduct fev(const LieAlgebra& L, const OrderedTree& t, int mu);
// Sum over all numerations of a planar tree.
BigradedCoproduct fev(const LieAlgebra& L, const PlanarTree& t, int mu);

// [...[[d^mu, X_{a1}], X_{a2}], ..., X_{ak}] as a series in d, one per mu;
// valid through degree cutoff - k + 1.
std::vector<TruncatedSeries> nested_commutator(const LieAlgebra& L, const SeriesMatrix& phi,
                                               const std::vector<int>& alpha);

// Chain-rule expansion of the nested commutator into (k-1)! products of
// differentiated phi entries.
struct ChainTerm {
  // factors[j] = derivative slots applied to the j-th phi factor; factor j has
  // lower index a_{j+1} and upper index mu (j = 0) or r_j.
  std::vector<std::vector<int>> factors;
  std::string render() const;
};
std::vector<ChainTerm> nested_commutator_expansion(int k);
// Evaluates the expansion by explicit index sums, component mu.
TruncatedSeries evaluate_expansion(const LieAlgebra& L, const SeriesMatrix& phi, const std::vector<ChainTerm>& terms,
                                   const std::vector<int>& alpha, int mu);

CoproductTable coproduct_trees_table(const LieAlgebra& L, int P);
BigradedCoproduct coproduct_trees(const LieAlgebra& L, int mu, int P);
CoproductTable coproduct_adjoint_table(const LieAlgebra& L, const SeriesMatrix& phi, int P);
BigradedCoproduct coproduct_adjoint(const LieAlgebra& L, const SeriesMatrix& phi, int mu, int P);

// Delta(d^a) = prod_i (Delta d^i)^{a_i} through total degree maxdeg.
SparsePoly coproduct_of_monomial(const CoproductTable& table, const Monomial& a, int maxdeg);

// tau(fev(s_{1,p})) against sum over ordered (p,1) trees.
CheckReport s1p_symmetry_check(const LieAlgebra& L, int p);
CheckReport vacuum_symmetrization_check(const LieAlgebra& L, int w);
CheckReport coassociativity_check(const CoproductTable& table, int maxdeg);
CheckReport counit_check(const CoproductTable& table);
CheckReport selection_rule_check(const LieAlgebra& L, int w, int b);

}  // namespace lieweyl
