#pragma once

#include <string>
#include <vector>

#include "lieweyl/feynman.hpp"
#include "lieweyl/pbw.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

// f * g = m(:exp(x_l (Delta - Delta_0) d^l):(f (x) g)), with the normal-ordered
// exponential expanded as a polynomial in x, d_L, d_R.
class CoproductStar {
 public:
  explicit CoproductStar(const CoproductTable& table);

  int max_degree() const { return max_degree_; }
  const SparsePoly& kernel() const { return kernel_; }
  Polynomial star(const Polynomial& f, const Polynomial& g) const;

 private:
  int n_;
  int max_degree_;
  SparsePoly kernel_;  // 3n variables: x, d_L, d_R
};

// Builds the adjoint-route coproduct to degree deg f + deg g; phi must reach that cutoff.
Polynomial star_coproduct(const LieAlgebra& L, const SeriesMatrix& phi, const Polynomial& f, const Polynomial& g);

struct StarReport {
  bool pass = true;
  std::vector<std::string> lines;
};

// exp(k.x) * exp(q.x) = exp(D(k,q).x), compared degree by degree through P on
// the coproduct and PBW routes.
StarReport star_exponential(const LieAlgebra& L, const std::vector<Rational>& k, const std::vector<Rational>& q,
                            int P);

CheckReport star_associativity_check(const LieAlgebra& L, const Polynomial& f, const Polynomial& g,
                                     const Polynomial& h);

// C^l_{tau mu} x_l d^mu.
WeylOperator m_operator(const LieAlgebra& L, int tau, int cutoff);

// chi^tau_{mu nu} summed through N = cutoff, one series per tau.
std::vector<SparsePoly> chi_series(const LieAlgebra& L, int mu, int nu, int cutoff);

// M_mu(x_nu * f) - x_nu * M_mu f = M_mu(x_nu) f + M_tau chi^tau_{mu nu} f.
CheckReport chi_check(const LieAlgebra& L, int mu, int nu, const Polynomial& f, int cutoff);
// All (mu, nu) and all monomials f with degree <= maxdeg.
CheckReport chi_check_all(const LieAlgebra& L, int maxdeg, int cutoff);

// Compares the two star routes on all monomial pairs with deg f + deg g <= maxdeg.
CheckReport star_routes_check(const LieAlgebra& L, int maxdeg);

}  // namespace lieweyl
