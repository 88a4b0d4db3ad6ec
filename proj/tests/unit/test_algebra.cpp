#include <gtest/gtest.h>

#include <random>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/bernoulli.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/series.hpp"

using namespace lieweyl;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(4, -6)), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, FactorialBinomial) {
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(binomial(7, 3), Rational(35));
  // Pascal's rule as oracle.
  for (int n = 1; n < 15; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(SparsePoly, ArithmeticAndDerivative) {
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  SparsePoly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.derivative(0), x * Rational(2));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p * p).truncated(3), SparsePoly(2));
  EXPECT_TRUE((x - x).is_zero());
}

TEST(SparsePoly, SubstituteMatchesDirectExpansion) {
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  SparsePoly p = x * x * y + Rational(3) * y;
  // x -> x + y, y -> 2x
  SparsePoly out = p.substitute({x + y, Rational(2) * x}, -1);
  SparsePoly expect = (x + y) * (x + y) * (Rational(2) * x) + Rational(6) * x;
  EXPECT_EQ(out, expect);
}

TEST(SparsePoly, RenderOrder) {
  SparsePoly p(3);
  p.add_term(Monomial::var(0) * Monomial::var(0), Rational(-1, 12));
  p.add_term(Monomial::var(2), Rational(1, 2));
  p.add_term(Monomial(), 1);
  EXPECT_EQ(render(p, d_name, DegreeOrder::Ascending), "1 + 1/2*d3 - 1/12*d1^2");
}

TEST(Monomial, OverflowIsReported) {
  Monomial m;
  m.bump(0, 250);
  EXPECT_THROW(m.bump(0, 10), std::overflow_error);
}

TEST(LieAlgebra, BuiltinsSatisfyJacobi) {
  for (const auto& L : builtin_algebras()) EXPECT_TRUE(verify_jacobi(L).pass) << L.name();
  EXPECT_TRUE(verify_jacobi(kappa_algebra({1, 2, Rational(-1, 3), 0})).pass);
}

TEST(LieAlgebra, Su2Brackets) {
  LieAlgebra L = su2_algebra();
  EXPECT_EQ(L.c(0, 1, 2), 1);
  EXPECT_EQ(L.c(1, 0, 2), -1);
  EXPECT_EQ(L.c(1, 2, 0), 1);
  EXPECT_EQ(L.c(2, 0, 1), 1);
  EXPECT_EQ(L.c(0, 2, 1), -1);
}

TEST(LieAlgebra, KappaStructure) {
  LieAlgebra L = kappa_algebra({1, 0, 0});
  // [x1, x2] = a1 x2
  EXPECT_EQ(L.c(0, 1, 1), 1);
  EXPECT_EQ(L.c(0, 1, 0), 0);
  EXPECT_EQ(L.c(1, 2, 1), 0);
}

TEST(LieAlgebra, RejectsJacobiViolation) {
  // [1,2]=1, [2,3]=2: the Jacobi sum on (1,2,3) is x1.
  EXPECT_THROW(LieAlgebra::from_entries("bad", 3, {{0, 1, 0, 1}, {1, 2, 1, 1}}), AlgebraError);
  EXPECT_THROW(LieAlgebra::from_entries("dup", 2, {{0, 1, 0, 1}, {0, 1, 0, 2}}), AlgebraError);
  EXPECT_THROW(LieAlgebra::from_entries("order", 2, {{1, 0, 0, 1}}), AlgebraError);
  EXPECT_THROW(LieAlgebra::from_entries("range", 2, {{0, 1, 5, 1}}), AlgebraError);
}

TEST(LieAlgebra, JsonRoundTrip) {
  for (const auto& L : builtin_algebras()) {
    LieAlgebra back = load_algebra(serialize_algebra(L));
    EXPECT_EQ(back, L) << L.name();
  }
  EXPECT_THROW(load_algebra(R"({"name":"x","dim":2,"bracket":[],"extra":1})"), AlgebraError);
  EXPECT_THROW(load_algebra(R"({"name":"x","dim":2,"bracket":[{"i":1,"j":2,"k":3,"c":"1"}]})"), AlgebraError);
  LieAlgebra h = load_algebra(R"({"name":"h","dim":3,"bracket":[{"i":1,"j":2,"k":3,"c":"1"}]})");
  EXPECT_EQ(h, heisenberg_algebra());
}

TEST(LieAlgebra, BuiltinSpecs) {
  EXPECT_EQ(builtin_algebra("abelian:4").dim(), 4);
  EXPECT_TRUE(builtin_algebra("abelian:2").is_abelian());
  EXPECT_EQ(builtin_algebra("kappa:1,0,0"), kappa_algebra({1, 0, 0}));
  EXPECT_THROW(builtin_algebra("nope"), AlgebraError);
}

// Independent oracle: Akiyama-Tanigawa algorithm yields B_n with B_1 = +1/2.
static std::vector<Rational> akiyama_tanigawa(int N) {
  std::vector<Rational> out, a(static_cast<std::size_t>(N + 1));
  for (int m = 0; m <= N; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    out.push_back(a[0]);
  }
  return out;
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  auto at = akiyama_tanigawa(20);
  for (int n = 0; n <= 20; ++n) {
    Rational expect = n == 1 ? Rational(-1, 2) : at[static_cast<std::size_t>(n)];
    EXPECT_EQ(bernoulli(n), expect) << n;
  }
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, PhiWeightsAreTaylorCoefficientsOfTOverOneMinusExpMinusT) {
  // t / (1 - e^{-t}) * (1 - e^{-t}) / t = 1, coefficientwise.
  const int N = 12;
  for (int m = 1; m <= N; ++m) {
    Rational s = 0;
    for (int j = 0; j <= m; ++j) {
      // (1 - e^{-t})/t = sum_j (-1)^j t^j / (j+1)!
      Rational g = Rational((j % 2) ? -1 : 1) / factorial(j + 1);
      s += phi_weight(m - j) * g;
    }
    EXPECT_EQ(s, 0) << m;
  }
  EXPECT_EQ(phi_weight(1), Rational(1, 2));
  EXPECT_EQ(phi_weight(2), Rational(1, 12));
}

TEST(Bernoulli, IdentityCheck) {
  for (int l = 1; l <= 8; ++l) EXPECT_TRUE(bernoulli_identity_check(l).pass) << l;
}

TEST(Series, CutoffMismatchAndPartial) {
  TruncatedSeries a = TruncatedSeries::variable(2, 3, 0), b = TruncatedSeries::variable(2, 4, 0);
  EXPECT_THROW(a + b, std::invalid_argument);
  TruncatedSeries s = a * a * a;
  EXPECT_EQ(s.partial(0).cutoff(), 2);
  EXPECT_TRUE((a * a * a * a).poly().is_zero());
  EXPECT_THROW(TruncatedSeries::constant(2, 0, 1).partial(0), CutoffError);
}

TEST(Phi, SolvesPhiEquation) {
  for (const auto& L : builtin_algebras())
    for (int D = 1; D <= 6; ++D) EXPECT_TRUE(verify_phi_equation(L, phi_symmetric(L, D)).pass) << L.name() << D;
}

TEST(Phi, AbelianIsIdentity) {
  LieAlgebra L = abelian_algebra(3);
  EXPECT_EQ(phi_symmetric(L, 5), SeriesMatrix::identity(3, 5));
}

TEST(Phi, IdentityFailsThePhiEquationForSu2) {
  LieAlgebra L = su2_algebra();
  EXPECT_FALSE(verify_phi_equation(L, SeriesMatrix::identity(3, 3)).pass);
}

TEST(Phi, Su2LowOrder) {
  SeriesMatrix phi = phi_symmetric(su2_algebra(), 3);
  EXPECT_EQ(phi.at(0, 1).render(), "1/2*d3 + 1/12*d1*d2");
  EXPECT_EQ(phi.at(0, 0).render(), "1 - 1/12*d2^2 - 1/12*d3^2");
}

TEST(Polynomial, CoproductIsAlgebraMap) {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Polynomial f = random_poly(rng, 3, 3, 3, 4), g = random_poly(rng, 3, 3, 3, 4);
    EXPECT_EQ(polynomial_coproduct(f * g), polynomial_coproduct(f) * polynomial_coproduct(g));
  }
}
