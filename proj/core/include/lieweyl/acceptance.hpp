#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lieweyl/feynman.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/pbw.hpp"
#include "lieweyl/report.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

struct Criterion {
  int id = 0;
  std::string title;
  double time_limit_seconds = 0;
  std::function<CheckReport()> run;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double time_limit_seconds = 0;
  std::vector<std::string> details;
};

std::vector<Criterion> acceptance_criteria();
CriterionResult run_criterion(const Criterion& c);
std::string format_result_line(const CriterionResult& r);

// Individual suites, reused by the command line and the unit tests.
CheckReport theta_xi_roundtrip(const LieAlgebra& L, int maxdeg);
CheckReport transport_identity(const LieAlgebra& L, int maxdeg);
CheckReport explicit_coproduct_display(const LieAlgebra& L);
CheckReport tree_census(int wmax);
CheckReport feyrule_diagram(const LieAlgebra& L);
CheckReport pbw_associativity(const LieAlgebra& L, int trials, unsigned seed);
CheckReport weyl_associativity(const LieAlgebra& L, int trials, unsigned seed);
CheckReport coderivation_property(const LieAlgebra& L, int trials, unsigned seed);
CheckReport commuting_partials(const LieAlgebra& L, int maxdeg);
CheckReport power_expansion(const LieAlgebra& L, int pmax, int fdeg, const std::vector<int>& a);
CheckReport classical_shape(const LieAlgebra& L, int pmax, const std::vector<int>& a);
CheckReport twisted_leibniz(const LieAlgebra& L, int maxdeg);
CheckReport regular_realization(const LieAlgebra& L, int cutoff);

// Sum of n-vector a^alpha N_k(alpha)^mu; entry k holds N_k(a), k = 1..kmax.
std::vector<LieVector> nested_commutator_along(const LieAlgebra& L, const SeriesMatrix& phi, const std::vector<int>& a,
                                               int kmax);

// The coproduct through degree 4 written out from the structure constants.
CoproductTable explicit_coproduct_formula(const LieAlgebra& L);

SparsePoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms, int coeff_range);

}  // namespace lieweyl
