#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/hausdorff.hpp"
#include "lieweyl/star.hpp"

using namespace lieweyl;

TEST(FreeSeries, LogOfProductOfExponentials) {
  const int len = 3;
  FreeSeries X = FreeSeries::letter(len, 0), Y = FreeSeries::letter(len, 1);
  FreeSeries prod = X.exp() * Y.exp();
  prod.add({}, -1);
  FreeSeries z = prod.log1p();
  const auto& t = z.terms();
  auto coeff = [&](std::initializer_list<int> letters) {
    for (const auto& [word, c] : t)
      if (std::equal(word.begin(), word.end(), letters.begin(), letters.end())) return c;
    return Rational(0);
  };
  EXPECT_EQ(coeff({0}), 1);
  EXPECT_EQ(coeff({1}), 1);
  EXPECT_EQ(coeff({0, 1}), Rational(1, 2));
  EXPECT_EQ(coeff({1, 0}), Rational(-1, 2));
  // (1/12)([X,[X,Y]] + [Y,[Y,X]]) expanded.
  EXPECT_EQ(coeff({0, 0, 1}), Rational(1, 12));
  EXPECT_EQ(coeff({0, 1, 0}), Rational(-1, 6));
  EXPECT_EQ(coeff({1, 1, 0}), Rational(1, 12));
  EXPECT_EQ(coeff({0, 0, 0}), 0);
}

TEST(Hausdorff, DynkinMatchesOracle) {
  for (const auto& L : builtin_algebras()) {
    auto D = dynkin_D(L, 5);
    auto O = bch_oracle(L, 5);
    ASSERT_EQ(D.size(), O.size());
    for (std::size_t i = 0; i < D.size(); ++i) EXPECT_EQ(D[i], O[i]) << L.name() << " N=" << i + 1;
    EXPECT_TRUE(hausdorff_cross_check(L, 5).pass) << L.name();
  }
}

TEST(Hausdorff, ThirdOrderPieces) {
  LieAlgebra L = su2_algebra();
  int n = 3;
  auto X = k_vector(n), Y = q_vector(n);
  auto XXY = lie_bracket(L, X, lie_bracket(L, X, Y));
  auto YYX = lie_bracket(L, Y, lie_bracket(L, Y, X));
  for (auto route : {HRoute::W, HRoute::B}) {
    auto H = bigraded_H(L, 3, route);
    for (int mu = 0; mu < n; ++mu) {
      EXPECT_EQ(H.at({2, 1})[static_cast<std::size_t>(mu)], XXY[static_cast<std::size_t>(mu)] * Rational(1, 12));
      EXPECT_EQ(H.at({1, 2})[static_cast<std::size_t>(mu)], YYX[static_cast<std::size_t>(mu)] * Rational(1, 12));
    }
  }
}

TEST(Hausdorff, NilpotentAlgebraTruncates) {
  auto D = dynkin_D(heisenberg_algebra(), 5);
  for (int N = 3; N <= 5; ++N) EXPECT_EQ(D[static_cast<std::size_t>(N - 1)], kq_zero(3)) << N;
}

TEST(Hausdorff, SymmetryLinearPartsDiagonal) {
  for (const auto& L : builtin_algebras()) {
    EXPECT_TRUE(hausdorff_symmetry_check(L, 6).pass) << L.name();
    EXPECT_TRUE(linear_parts_check(L, 5).pass) << L.name();
    EXPECT_TRUE(hausdorff_diagonal_check(L, 5).pass) << L.name();
  }
}

TEST(Star, UnitAndCommutator) {
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    SeriesMatrix phi = phi_symmetric(L, 4);
    Polynomial one = Polynomial::constant(n, 1);
    Polynomial f = x_var(n, 0) * x_var(n, 1) + x_var(n, 2) * Rational(3);
    EXPECT_EQ(star_coproduct(L, phi, one, f), f);
    EXPECT_EQ(star_coproduct(L, phi, f, one), f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Polynomial c = star_coproduct(L, phi, x_var(n, i), x_var(n, j)) - star_coproduct(L, phi, x_var(n, j), x_var(n, i));
        Polynomial expect(n);
        for (int k = 0; k < n; ++k) expect.add_term(Monomial::var(k), L.c(i, j, k));
        EXPECT_EQ(c, expect);
      }
  }
}

TEST(Star, AbelianIsPointwise) {
  LieAlgebra L = abelian_algebra(3);
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    Polynomial f = random_poly(rng, 3, 2, 3, 3), g = random_poly(rng, 3, 2, 3, 3);
    EXPECT_EQ(star_coproduct(L, phi_symmetric(L, 4), f, g), f * g);
  }
}

TEST(Star, SymmetricOrderingOfSquares) {
  // x1 * x1 = x1^2 in symmetric ordering, for any algebra.
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    EXPECT_EQ(star_pbw(L, phi_symmetric(L, 2), x_var(n, 0), x_var(n, 0)), x_var(n, 0) * x_var(n, 0));
  }
}

TEST(Star, RoutesAndAssociativity) {
  std::mt19937 rng(23);
  for (const auto& L : builtin_algebras()) {
    EXPECT_TRUE(star_routes_check(L, 4).pass) << L.name();
    int n = L.dim();
    for (int t = 0; t < 3; ++t) {
      Polynomial f = random_poly(rng, n, 2, 2, 3), g = random_poly(rng, n, 2, 2, 3), h = random_poly(rng, n, 1, 2, 3);
      EXPECT_TRUE(star_associativity_check(L, f, g, h).pass) << L.name();
    }
  }
}

TEST(Star, KernelRefusesTooLargeDegrees) {
  LieAlgebra L = su2_algebra();
  CoproductStar s(coproduct_trees_table(L, 2));
  EXPECT_THROW(s.star(x_var(3, 0) * x_var(3, 1), x_var(3, 2)), CutoffError);
}

TEST(Star, Exponentials) {
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    std::vector<Rational> k(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
    k[0] = Rational(2, 3);
    q[static_cast<std::size_t>(n - 1)] = -1;
    q[0] = Rational(1, 5);
    StarReport r = star_exponential(L, k, q, 4);
    EXPECT_TRUE(r.pass) << L.name();
  }
}

TEST(Chi, CommutatorIdentity) {
  EXPECT_TRUE(chi_check_all(su2_algebra(), 2, 5).pass);
  EXPECT_TRUE(chi_check_all(kappa_algebra({1, 0, 0}), 2, 5).pass);
  EXPECT_TRUE(chi_check_all(heisenberg_algebra(), 2, 4).pass);
}

TEST(Chi, LeadingTerms) {
  // chi^tau_{mu nu} starts with (1/2) C^tau_{mu nu}.
  LieAlgebra L = su2_algebra();
  auto chi = chi_series(L, 0, 1, 4);
  EXPECT_EQ(chi[2].constant_term(), Rational(1, 2));
  EXPECT_EQ(chi[0].constant_term(), 0);
}

TEST(Properties, WeylAssociativityAndCoderivation) {
  for (const auto& L : builtin_algebras()) {
    EXPECT_TRUE(weyl_associativity(L, 10, 4).pass) << L.name();
    EXPECT_TRUE(coderivation_property(L, 10, 8).pass) << L.name();
  }
}
