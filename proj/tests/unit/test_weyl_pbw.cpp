#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/feynman.hpp"
#include "lieweyl/pbw.hpp"
#include "lieweyl/weyl.hpp"

using namespace lieweyl;

namespace {

PbwElement mono(int n, const Monomial& m) { return PbwElement(SparsePoly::term(n, m, 1)); }

std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : monomials_of_degree(n, k)) out.push_back(m);
  return out;
}

}  // namespace

TEST(Weyl, CanonicalCommutator) {
  const int n = 3, D = 4;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(weyl_commutator(WeylOperator::d(n, D, i), WeylOperator::x(n, D, j)),
                WeylOperator::constant(n, D, i == j ? 1 : 0));
      EXPECT_TRUE(weyl_commutator(WeylOperator::x(n, D, i), WeylOperator::x(n, D, j)).is_zero());
    }
}

TEST(Weyl, ProductActsAsComposition) {
  // Oracle: the action on polynomials, computed factor by factor.
  std::mt19937 rng(11);
  const int n = 3;
  for (int t = 0; t < 20; ++t) {
    WeylOperator a(n, 6, random_poly(rng, 2 * n, 4, 4, 3).truncated(n, 2 * n, 2));
    WeylOperator b(n, 6, random_poly(rng, 2 * n, 4, 4, 3).truncated(n, 2 * n, 2));
    Polynomial f = random_poly(rng, n, 4, 4, 3);
    EXPECT_EQ(apply(weyl_mul(a, b), f), apply(a, apply(b, f)));
  }
}

TEST(Weyl, TruncationDropsHighDerivatives) {
  WeylOperator d = WeylOperator::d(1, 2, 0);
  EXPECT_TRUE(weyl_mul(weyl_mul(d, d), d).is_zero());
  EXPECT_EQ(weyl_mul(d, d).render(), "d1^2");
}

TEST(Weyl, RealizedGeneratorsSatisfyBrackets) {
  for (const auto& L : builtin_algebras()) EXPECT_TRUE(regular_realization(L, 5).pass) << L.name();
}

TEST(Weyl, VacuumOfGenerator) {
  SeriesMatrix phi = phi_symmetric(su2_algebra(), 4);
  WeylOperator X1 = realize_generator(phi, 0);
  EXPECT_EQ(vacuum(X1), x_var(3, 0));
}

TEST(Pbw, GeneratorCommutators) {
  for (const auto& L : builtin_algebras()) {
    Envelope env(L);
    int n = L.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PbwElement c = env.word({i, j}) - env.word({j, i});
        SparsePoly expect(n);
        for (int k = 0; k < n; ++k) expect.add_term(Monomial::var(k), L.c(i, j, k));
        EXPECT_EQ(c.poly, expect);
      }
  }
}

TEST(Pbw, OrderedWordsAreBasisElements) {
  Envelope env(su2_algebra());
  EXPECT_EQ(env.word({0, 0, 1, 2}).render(), "X1^2*X2*X3");
  EXPECT_EQ(env.word({1, 0}).render(), "X1*X2 - X3");
}

TEST(Pbw, WordConcatenationIsMultiplication) {
  std::mt19937 rng(3);
  for (const auto& L : builtin_algebras()) {
    Envelope env(L);
    std::uniform_int_distribution<int> letter(0, L.dim() - 1), len(0, 4);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
      for (auto& x : a) x = letter(rng);
      for (auto& x : b) x = letter(rng);
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      EXPECT_EQ(env.mul(env.word(a), env.word(b)), env.word(ab));
    }
    EXPECT_TRUE(pbw_associativity(L, 10, 99).pass);
  }
}

TEST(Pbw, SymmetrizationMatchesBruteForce) {
  // Oracle: average over all k! orderings of the letter positions.
  for (const auto& L : builtin_algebras()) {
    Envelope env(L);
    int n = L.dim();
    for (const auto& m : monomials_up_to(n, 4)) {
      std::vector<int> letters;
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < m[i]; ++e) letters.push_back(i);
      std::vector<int> perm(letters.size());
      std::iota(perm.begin(), perm.end(), 0);
      PbwElement sum{SparsePoly(n)};
      do {
        std::vector<int> w;
        for (int p : perm) w.push_back(letters[static_cast<std::size_t>(p)]);
        sum += env.word(w);
      } while (std::next_permutation(perm.begin(), perm.end()));
      sum = (Rational(1) / factorial(static_cast<int>(letters.size()))) * sum;
      EXPECT_EQ(env.coexp_xi(x_monomial(n, m)), sum) << L.name();
    }
  }
}

TEST(Pbw, ThetaIntertwinesLeftMultiplication) {
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    SeriesMatrix phi = phi_symmetric(L, 5);
    Realization real(L, phi);
    Envelope env(L);
    for (const auto& m : monomials_up_to(n, 3)) {
      PbwElement u = mono(n, m);
      for (int i = 0; i < n; ++i)
        EXPECT_EQ(real.theta(env.left_mul_generator(i, u)), apply(real.generator(i), real.theta(u))) << L.name();
    }
  }
}

TEST(Pbw, ThetaXiRoundTripAndInverse) {
  for (const auto& L : builtin_algebras()) {
    EXPECT_TRUE(theta_xi_roundtrip(L, 4).pass) << L.name();
    SeriesMatrix phi = phi_symmetric(L, 4);
    Envelope env(L);
    for (const auto& m : monomials_up_to(L.dim(), 4)) {
      Polynomial f = x_monomial(L.dim(), m);
      EXPECT_EQ(xi_inverse(L, phi, env.coexp_xi(f)), f);
    }
  }
}

TEST(Pbw, ThetaNeedsEnoughCutoff) {
  LieAlgebra L = su2_algebra();
  Realization real(L, phi_symmetric(L, 2));
  EXPECT_THROW(real.theta(Envelope(L).word({0, 1, 2})), CutoffError);
}

TEST(DeformedPartial, OnGeneratorsAndTransport) {
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    SeriesMatrix phi = phi_symmetric(L, 4);
    for (int mu = 0; mu < n; ++mu) {
      EXPECT_TRUE(deformed_partial(L, phi, mu, PbwElement::one(n)).poly.is_zero());
      for (int nu = 0; nu < n; ++nu)
        EXPECT_EQ(deformed_partial(L, phi, mu, PbwElement::generator(n, nu)),
                  (mu == nu ? Rational(1) : Rational(0)) * PbwElement::one(n));
    }
    EXPECT_TRUE(transport_identity(L, 4).pass) << L.name();
    EXPECT_TRUE(commuting_partials(L, 4).pass) << L.name();
  }
}

TEST(DeformedPartial, PowerExpansionAndClassicalShape) {
  for (const auto& L : builtin_algebras()) {
    EXPECT_TRUE(power_expansion(L, 3, 2, {2, 0, -1}).pass) << L.name();
    EXPECT_TRUE(classical_shape(L, 4, {1, 1, 3}).pass) << L.name();
  }
}

TEST(DeformedPartial, TwistedLeibniz) {
  for (const auto& L : builtin_algebras()) EXPECT_TRUE(twisted_leibniz(L, 2).pass) << L.name();
}

// phi^mu_nu(d)(f g) = sum_N 1/N! sum_i sum_k d^{i without i_k} phi^{i_k}_nu(d)(f) N_N(i)^mu(d)(g)
TEST(DeformedPartial, LeibnizRuleForPhi) {
  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0})}) {
    int n = L.dim();
    const int fdeg = 2, gdeg = 2, D = 8;
    SeriesMatrix phi = phi_symmetric(L, D);
    Envelope env(L);
    DeformedCalculus calc(env, phi);
    std::vector<PbwElement> fs, gs;
    for (const auto& m : monomials_up_to(n, fdeg)) fs.push_back(mono(n, m));
    for (const auto& m : monomials_up_to(n, gdeg)) gs.push_back(mono(n, m));
    std::mt19937 rng(17);
    std::shuffle(fs.begin(), fs.end(), rng);
    std::shuffle(gs.begin(), gs.end(), rng);
    fs.resize(6);
    gs.resize(6);
    for (const auto& f : fs)
      for (const auto& g : gs)
        for (int mu = 0; mu < n; ++mu)
          for (int nu = 0; nu < n; ++nu) {
            PbwElement lhs = calc.evaluate(phi.at(mu, nu).poly(), env.mul(f, g));
            PbwElement rhs{SparsePoly(n)};
            for (int N = 1; N <= f.degree() + 1; ++N) {
              std::vector<int> idx(static_cast<std::size_t>(N), 0);
              while (true) {
                PbwElement left{SparsePoly(n)};
                for (int k = 0; k < N; ++k) {
                  Monomial others;
                  for (int j = 0; j < N; ++j)
                    if (j != k) others.bump(idx[static_cast<std::size_t>(j)]);
                  PbwElement t = calc.evaluate(phi.at(idx[static_cast<std::size_t>(k)], nu).poly(), f);
                  left += calc.partial_power(others, t);
                }
                if (!left.poly.is_zero()) {
                  auto Nn = nested_commutator(L, phi, idx);
                  PbwElement right = calc.evaluate(Nn[static_cast<std::size_t>(mu)].poly(), g);
                  rhs += (Rational(1) / factorial(N)) * env.mul(left, right);
                }
                int p = 0;
                while (p < N && ++idx[static_cast<std::size_t>(p)] == n) idx[static_cast<std::size_t>(p++)] = 0;
                if (p == N) break;
              }
            }
            EXPECT_EQ(lhs, rhs) << L.name() << " mu=" << mu << " nu=" << nu << " f=" << f.render()
                                << " g=" << g.render();
          }
  }
}

TEST(PbwStar, CommutatorOfCoordinates) {
  for (const auto& L : builtin_algebras()) {
    int n = L.dim();
    PbwStar star(L, 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Polynomial c = star.star(x_var(n, i), x_var(n, j)) - star.star(x_var(n, j), x_var(n, i));
        Polynomial expect(n);
        for (int k = 0; k < n; ++k) expect.add_term(Monomial::var(k), L.c(i, j, k));
        EXPECT_EQ(c, expect);
      }
  }
}
