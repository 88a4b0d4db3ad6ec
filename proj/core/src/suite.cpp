#include <fmt/format.h>

#include <chrono>
#include <stdexcept>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/bernoulli.hpp"
#include "lieweyl/hausdorff.hpp"
#include "lieweyl/star.hpp"

namespace lieweyl {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<LieAlgebra> nonabelian_builtins() { return {su2_algebra(), heisenberg_algebra(), kappa_algebra({1, 0, 0})}; }

CheckReport merged(std::string name, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.name = std::move(name);
  for (const auto& p : parts) {
    if (!p.pass) r.pass = false;
    r.details.push_back(fmt::format("{}: {}", p.name, p.pass ? "pass" : "FAIL"));
    if (!p.pass)
      for (const auto& d : p.details) r.details.push_back("  " + d);
  }
  return r;
}

PbwElement pbw_monomial(int n, const Monomial& m) { return PbwElement(SparsePoly::term(n, m, 1)); }

}  // namespace

SparsePoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms, int coeff_range) {
  std::uniform_int_distribution<int> deg(0, maxdeg), var(0, nvars - 1), coeff(-coeff_range, coeff_range);
  SparsePoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m.bump(var(rng));
    p.add_term(m, coeff(rng));
  }
  return p;
}

CheckReport theta_xi_roundtrip(const LieAlgebra& L, int maxdeg) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("theta(xi(f)) = f, degree <= {} ({})", maxdeg, L.name());
  Envelope env(L);
  Realization real(L, phi_symmetric(L, maxdeg));
  int count = 0;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      Polynomial f = x_monomial(n, m);
      Polynomial back = real.theta(env.coexp_xi(f));
      ++count;
      if (!(back == f)) r.fail(fmt::format("{} -> {}", render_polynomial(f), render_polynomial(back)));
    }
  r.note(fmt::format("{} monomials", count));
  return r;
}

CheckReport transport_identity(const LieAlgebra& L, int maxdeg) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("theta(d^mu u) = d^mu theta(u), degree <= {} ({})", maxdeg, L.name());
  Envelope env(L);
  SeriesMatrix phi = phi_symmetric(L, maxdeg);
  Realization real(L, phi);
  DeformedCalculus calc(env, phi);
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      PbwElement u = pbw_monomial(n, m);
      Polynomial tu = real.theta(u);
      for (int mu = 0; mu < n; ++mu) {
        Polynomial lhs = real.theta(calc.partial(mu, u));
        Polynomial rhs = tu.derivative(mu);
        if (!(lhs == rhs))
          r.fail(fmt::format("mu={} u={}: {} vs {}", mu + 1, u.render(), render_polynomial(lhs), render_polynomial(rhs)));
      }
    }
  return r;
}

CoproductTable explicit_coproduct_formula(const LieAlgebra& L) {
  int n = L.dim();
  CoproductTable table;
  auto L_ = [](int a) { return Monomial::var(a); };
  auto R_ = [n](int a) { return Monomial::var(n + a); };
  for (int mu = 0; mu < n; ++mu) {
    SparsePoly p(2 * n);
    p.add_term(R_(mu), 1);
    p.add_term(L_(mu), 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        p.add_term(L_(a) * R_(b), L.c(a, b, mu) / 2);
        for (int g = 0; g < n; ++g) {
          Rational cc = 0;
          for (int s = 0; s < n; ++s) cc += L.c(a, b, s) * L.c(s, g, mu);
          if (sgn(cc) != 0) {
            p.add_term(L_(a) * R_(b) * R_(g), cc / 12);
            p.add_term(L_(b) * L_(g) * R_(a), cc / 12);
          }
          for (int d = 0; d < n; ++d) {
            Rational ccc = 0;
            for (int s = 0; s < n; ++s)
              for (int t = 0; t < n; ++t) ccc += L.c(a, b, s) * L.c(s, g, t) * L.c(t, d, mu);
            if (sgn(ccc) != 0) p.add_term(L_(a) * L_(g) * R_(b) * R_(d), -ccc / 24);
          }
        }
      }
    table.emplace_back(n, mu, 4, p);
  }
  return table;
}

CheckReport explicit_coproduct_display(const LieAlgebra& L) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("explicit coproduct through degree 4 ({})", L.name());
  CoproductTable expected = explicit_coproduct_formula(L);
  CoproductTable trees = coproduct_trees_table(L, 4);
  CoproductTable adjoint = coproduct_adjoint_table(L, phi_symmetric(L, 4), 4);
  for (int mu = 0; mu < n; ++mu) {
    if (!(trees[at(mu)] == expected[at(mu)]))
      r.fail(fmt::format("trees mu={}: {} expected {}", mu + 1, trees[at(mu)].render(), expected[at(mu)].render()));
    if (!(adjoint[at(mu)] == expected[at(mu)]))
      r.fail(fmt::format("adjoint mu={}: {} expected {}", mu + 1, adjoint[at(mu)].render(), expected[at(mu)].render()));
  }
  // The three correction orders must actually be present.
  bool half = false, twelfth = false, m24 = false;
  for (const auto& t : expected)
    for (const auto& [m, c] : t.poly()) {
      int deg = m.degree();
      half |= deg == 2 && sgn(c) != 0;
      twelfth |= deg == 3 && sgn(c) != 0;
      m24 |= deg == 4 && sgn(c) != 0;
    }
  if (!half || !twelfth || !m24) r.fail("display terms of order C, C^2, C^3 not all nonzero for this algebra");
  r.note("Delta d1 = " + expected[0].render());
  return r;
}

CheckReport tree_census(int wmax) {
  CheckReport r;
  r.name = fmt::format("tree census w <= {}", wmax);
  for (int w = 1; w <= wmax; ++w) {
    auto rec = count_ordered(w, 0);
    auto closed = double_factorial_count(w);
    auto brute = static_cast<std::uint64_t>(enumerate_ordered(w, 0).size());
    r.note(fmt::format("s_{}: recursion {} closed form {} enumeration {}", w, rec, closed, brute));
    if (rec != closed || rec != brute) r.fail(fmt::format("s_{} disagrees", w));
  }
  const std::uint64_t expected[] = {1, 1, 3, 15, 105};
  for (int w = 1; w <= std::min(wmax, 5); ++w)
    if (count_ordered(w, 0) != expected[w - 1]) r.fail(fmt::format("s_{} != {}", w, expected[w - 1]));
  if (wmax >= 5) r.note("s_5 = 105 = 7!!; the value 15 belongs to s_4 and does not hold for s_5");
  int contributing = 0;
  for (const auto& t : enumerate_trees(4, 1)) contributing += contributing_filter(t) ? 1 : 0;
  r.note(fmt::format("contributing planar (4,1) trees: {}", contributing));
  if (contributing != 8) r.fail("expected 8 contributing (4,1) trees");
  return r;
}

CheckReport feyrule_diagram(const LieAlgebra& L) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("single diagram w(b,w()) ({})", L.name());
  OrderedTree t{PlanarTree::parse("w(b,w())"), {1, 2}};
  TensorSeries e = ev(L, t);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int mu = 0; mu < n; ++mu) {
        SparsePoly expect(n);
        for (int k = 0; k < n; ++k)
          for (int rho = 0; rho < n; ++rho)
            expect.add_term(Monomial::var(rho), Rational(1, 12) * L.c(a1, rho, k) * L.c(k, a2, mu));
        SparsePoly got = e.component(mu, {a1, a2});
        if (!(got == expect))
          r.fail(fmt::format("mu={} a=({},{}): {} vs {}", mu + 1, a1 + 1, a2 + 1, render(got, d_name, DegreeOrder::Ascending),
                             render(expect, d_name, DegreeOrder::Ascending)));
      }
  return r;
}

CheckReport pbw_associativity(const LieAlgebra& L, int trials, unsigned seed) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("PBW associativity ({})", L.name());
  std::mt19937 rng(seed);
  Envelope env(L);
  for (int t = 0; t < trials; ++t) {
    PbwElement a(random_poly(rng, n, 3, 3, 3)), b(random_poly(rng, n, 3, 3, 3)), c(random_poly(rng, n, 3, 3, 3));
    PbwElement left = env.mul(env.mul(a, b), c), right = env.mul(a, env.mul(b, c));
    if (!(left == right)) r.fail(fmt::format("({})({})({}) not associative", a.render(), b.render(), c.render()));
  }
  return r;
}

CheckReport weyl_associativity(const LieAlgebra& L, int trials, unsigned seed) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("Weyl associativity ({})", L.name());
  std::mt19937 rng(seed);
  // Each factor has d-degree <= 2, so with cutoff 6 no product term is ever dropped.
  const int cutoff = 6;
  auto random_op = [&] {
    SparsePoly p = random_poly(rng, 2 * n, 4, 4, 3);
    return WeylOperator(n, cutoff, p.truncated(n, 2 * n, 2));
  };
  for (int t = 0; t < trials; ++t) {
    WeylOperator a = random_op(), b = random_op(), c = random_op();
    if (!(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))))
      r.fail(fmt::format("({})({})({}) not associative", a.render(), b.render(), c.render()));
    Polynomial f = random_poly(rng, n, 3, 3, 3);
    if (!(apply(weyl_mul(a, b), f) == apply(a, apply(b, f))))
      r.fail(fmt::format("action of ({})({}) on {} is not a homomorphism", a.render(), b.render(), render_polynomial(f)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      WeylOperator c = weyl_commutator(WeylOperator::d(n, cutoff, i), WeylOperator::x(n, cutoff, j));
      if (!(c == WeylOperator::constant(n, cutoff, i == j ? 1 : 0)))
        r.fail(fmt::format("[d{}, x{}] = {}", i + 1, j + 1, c.render()));
    }
  return r;
}

CheckReport coderivation_property(const LieAlgebra& L, int trials, unsigned seed) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("coderivation of x_s chi(d) ({})", L.name());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> var(0, n - 1), deg(0, 5);
  const int cutoff = 5;
  for (int t = 0; t < trials; ++t) {
    SparsePoly chi = random_poly(rng, n, 3, 3, 3);
    int sigma = var(rng);
    WeylOperator A(n, cutoff, SparsePoly::variable(2 * n, sigma) * chi.embedded(2 * n, n));
    Monomial m;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m.bump(var(rng));
    Polynomial f = x_monomial(n, m);
    SparsePoly lhs = polynomial_coproduct(apply(A, f));
    SparsePoly df = polynomial_coproduct(f);
    SparsePoly rhs = apply_on_block(A, df, 0) + apply_on_block(A, df, n);
    if (!(lhs == rhs)) r.fail(fmt::format("A = {}, f = {}", A.render(), render_polynomial(f)));
  }
  return r;
}

CheckReport commuting_partials(const LieAlgebra& L, int maxdeg) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("deformed partials commute, degree <= {} ({})", maxdeg, L.name());
  Envelope env(L);
  DeformedCalculus calc(env, phi_symmetric(L, maxdeg));
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      PbwElement u = pbw_monomial(n, m);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!(calc.partial(a, calc.partial(b, u)) == calc.partial(b, calc.partial(a, u))))
            r.fail(fmt::format("d{} d{} on {}", a + 1, b + 1, u.render()));
    }
  return r;
}

std::vector<LieVector> nested_commutator_along(const LieAlgebra& L, const SeriesMatrix& phi, const std::vector<int>& a,
                                               int kmax) {
  int n = L.dim();
  // N_1(a)^mu = phi^mu_alpha a^alpha, N_{k+1}(a)^mu = d_rho N_k(a)^mu N_1(a)^rho
  LieVector first(at(n), SparsePoly(n));
  for (int mu = 0; mu < n; ++mu)
    for (int al = 0; al < n; ++al)
      if (a[at(al)]) first[at(mu)] += phi.at(mu, al).poly() * Rational(a[at(al)]);
  std::vector<LieVector> out{first};
  for (int k = 2; k <= kmax; ++k) {
    const LieVector& prev = out.back();
    LieVector next(at(n), SparsePoly(n));
    for (int mu = 0; mu < n; ++mu)
      for (int rho = 0; rho < n; ++rho) {
        SparsePoly d = prev[at(mu)].derivative(rho);
        if (!d.is_zero()) next[at(mu)] += multiply_truncated(d, first[at(rho)], 0, n, phi.cutoff() - k + 1);
      }
    out.push_back(next);
  }
  return out;
}

CheckReport power_expansion(const LieAlgebra& L, int pmax, int fdeg, const std::vector<int>& a) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("d^mu(a^p f) expansion, p <= {} ({})", pmax, L.name());
  int cutoff = pmax + fdeg + 1;
  SeriesMatrix phi = phi_symmetric(L, cutoff);
  Envelope env(L);
  DeformedCalculus calc(env, phi);
  PbwElement ahat{SparsePoly(n)};
  for (int i = 0; i < n; ++i) ahat.poly.add_term(Monomial::var(i), a[at(i)]);
  auto Nk = nested_commutator_along(L, phi, a, pmax);
  std::vector<PbwElement> apow{PbwElement::one(n)};
  for (int p = 1; p <= pmax; ++p) apow.push_back(env.mul(apow.back(), ahat));
  for (int d = 0; d <= fdeg; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      PbwElement f = pbw_monomial(n, m);
      for (int p = 0; p <= pmax; ++p)
        for (int mu = 0; mu < n; ++mu) {
          PbwElement lhs = calc.partial(mu, env.mul(apow[at(p)], f));
          PbwElement rhs = env.mul(apow[at(p)], calc.partial(mu, f));
          for (int k = 1; k <= p; ++k)
            rhs += binomial(p, k) * env.mul(apow[at(p - k)], calc.evaluate(Nk[at(k - 1)][at(mu)], f));
          if (!(lhs == rhs))
            r.fail(fmt::format("p={} mu={} f={}: {} vs {}", p, mu + 1, f.render(), lhs.render(), rhs.render()));
        }
    }
  return r;
}

CheckReport classical_shape(const LieAlgebra& L, int pmax, const std::vector<int>& a) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("classical shape of derivatives of a^p, p <= {} ({})", pmax, L.name());
  Envelope env(L);
  DeformedCalculus calc(env, phi_symmetric(L, pmax));
  PbwElement ahat{SparsePoly(n)};
  for (int i = 0; i < n; ++i) ahat.poly.add_term(Monomial::var(i), a[at(i)]);
  std::vector<PbwElement> apow{PbwElement::one(n)};
  for (int p = 1; p <= pmax; ++p) apow.push_back(env.mul(apow.back(), ahat));
  for (int p = 0; p <= pmax; ++p)
    for (int s = 0; s <= p; ++s)
      for (const auto& alpha : monomials_of_degree(n, s)) {
        PbwElement lhs = calc.partial_power(alpha, apow[at(p)]);
        // (1/s!) d^{a1..as}: alpha is a multiset, the derivatives commute.
        lhs = (Rational(1) / factorial(s)) * lhs;
        Rational coeff = binomial(p, s);
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < alpha[i]; ++e) coeff *= a[at(i)];
        PbwElement rhs = coeff * apow[at(p - s)];
        if (!(lhs == rhs))
          r.fail(fmt::format("p={} alpha={}: {} vs {}", p, render_monomial(alpha, n, d_name), lhs.render(), rhs.render()));
      }
  return r;
}

CheckReport twisted_leibniz(const LieAlgebra& L, int maxdeg) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("twisted Leibniz rule, degrees <= {} (x) {} ({})", maxdeg, maxdeg, L.name());
  int P = 2 * maxdeg;
  SeriesMatrix phi = phi_symmetric(L, P);
  CoproductTable table = coproduct_adjoint_table(L, phi, P);
  Envelope env(L);
  DeformedCalculus calc(env, phi);
  std::vector<Monomial> monos;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(n, d)) monos.push_back(m);
  for (const auto& mu_m : monos)
    for (const auto& mv : monos) {
      PbwElement u = pbw_monomial(n, mu_m), v = pbw_monomial(n, mv);
      PbwElement uv = env.mul(u, v);
      for (int mu = 0; mu < n; ++mu) {
        PbwElement lhs = calc.partial(mu, uv);
        PbwElement rhs{SparsePoly(n)};
        for (const auto& [m, c] : table[at(mu)].poly()) {
          Monomial left, right;
          for (int i = 0; i < n; ++i) {
            left.e[at(i)] = m.e[at(i)];
            right.e[at(i)] = m.e[at(n + i)];
          }
          if (left.degree() > u.degree() || right.degree() > v.degree()) continue;
          PbwElement du = calc.partial_power(left, u);
          if (du.poly.is_zero()) continue;
          PbwElement dv = calc.partial_power(right, v);
          if (dv.poly.is_zero()) continue;
          rhs += c * env.mul(du, dv);
        }
        if (!(lhs == rhs)) r.fail(fmt::format("mu={} u={} v={}", mu + 1, u.render(), v.render()));
      }
    }
  return r;
}

CheckReport regular_realization(const LieAlgebra& L, int cutoff) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("realized generators satisfy the brackets through d-degree {} ({})", cutoff - 1, L.name());
  SeriesMatrix phi = phi_symmetric(L, cutoff);
  std::vector<WeylOperator> X;
  for (int i = 0; i < n; ++i) X.push_back(realize_generator(phi, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      WeylOperator diff = weyl_commutator(X[at(i)], X[at(j)]);
      for (int k = 0; k < n; ++k) diff -= X[at(k)] * L.c(i, j, k);
      WeylOperator low = diff.with_cutoff(cutoff - 1);
      if (!low.is_zero()) r.fail(fmt::format("[X{}, X{}] residual {}", i + 1, j + 1, low.render()));
    }
  return r;
}

std::vector<Criterion> acceptance_criteria() {
  std::vector<Criterion> cs;
  cs.push_back({1, "phi equation through d-degree 5 at cutoff 6", 5, [] {
                  std::vector<CheckReport> parts;
                  for (const auto& L : nonabelian_builtins()) parts.push_back(verify_phi_equation(L, phi_symmetric(L, 6)));
                  return merged("phi equation", parts);
                }});
  cs.push_back({2, "theta o xi = id on monomials of degree <= 5", 30, [] {
                  std::vector<CheckReport> parts;
                  for (const auto& L : builtin_algebras()) parts.push_back(theta_xi_roundtrip(L, 5));
                  return merged("theta xi", parts);
                }});
  cs.push_back({3, "explicit coproduct display through degree 4 (su2, both routes)", 10, [] {
                  return merged("explicit coproduct", {explicit_coproduct_display(su2_algebra())});
                }});
  cs.push_back({4, "tree census s1..s5 and contributing (4,1) trees", 5, [] {
                  return merged("tree census", {tree_census(5)});
                }});
  cs.push_back({5, "single diagram evaluates to (1/12) C C", 1, [] {
                  return merged("feynman diagram", {feyrule_diagram(su2_algebra())});
                }});
  cs.push_back({6, "s(1,p) symmetry p=1..4 and Bernoulli identity l=1..8", 20, [] {
                  std::vector<CheckReport> parts;
                  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0})})
                    for (int p = 1; p <= 4; ++p) parts.push_back(s1p_symmetry_check(L, p));
                  for (int l = 1; l <= 8; ++l) parts.push_back(bernoulli_identity_check(l));
                  return merged("s1p symmetry", parts);
                }});
  cs.push_back({7, "Hausdorff routes agree (P <= 5) and symmetry (P <= 6)", 60, [] {
                  std::vector<CheckReport> parts;
                  for (const auto& L : builtin_algebras()) {
                    parts.push_back(hausdorff_cross_check(L, 5));
                    parts.push_back(hausdorff_symmetry_check(L, 6));
                  }
                  return merged("hausdorff", parts);
                }});
  cs.push_back({8, "coproduct = Hausdorff (P <= 5) and star routes agree (degree <= 4)", 90, [] {
                  std::vector<CheckReport> parts;
                  for (const auto& L : nonabelian_builtins()) {
                    parts.push_back(compare_coproduct(L, 5));
                    parts.push_back(star_routes_check(L, 4));
                  }
                  return merged("coproduct and star routes", parts);
                }});
  cs.push_back({9, "exponential star check on a 3x3 grid, P = 4", 30, [] {
                  std::vector<CheckReport> parts;
                  const std::vector<std::vector<Rational>> ks = {
                      {1, 0, 0}, {Rational(1, 2), 1, 0}, {0, Rational(-1, 3), 2}};
                  const std::vector<std::vector<Rational>> qs = {
                      {0, 1, 0}, {Rational(-1), 0, Rational(1, 2)}, {Rational(2, 3), Rational(1, 4), 1}};
                  for (const auto& L : builtin_algebras()) {
                    CheckReport rep;
                    rep.name = "star exponential (" + L.name() + ")";
                    for (const auto& k : ks)
                      for (const auto& q : qs) {
                        StarReport s = star_exponential(L, k, q, 4);
                        if (!s.pass) {
                          rep.pass = false;
                          for (const auto& line : s.lines) rep.details.push_back(line);
                        }
                      }
                    parts.push_back(rep);
                  }
                  return merged("star exponential", parts);
                }});
  cs.push_back({10, "chi identity, all (mu,nu), f of degree <= 2, cutoff 5", 30, [] {
                  return merged("chi", {chi_check_all(su2_algebra(), 2, 5), chi_check_all(kappa_algebra({1, 0, 0}), 2, 5)});
                }});
  cs.push_back({11, "property suites", 60, [] {
                  std::vector<CheckReport> parts;
                  unsigned seed = 20240611;
                  for (const auto& L : builtin_algebras()) {
                    parts.push_back(pbw_associativity(L, 15, seed));
                    parts.push_back(weyl_associativity(L, 15, seed + 1));
                    parts.push_back(coderivation_property(L, 20, seed + 2));
                    parts.push_back(commuting_partials(L, 4));
                    parts.push_back(power_expansion(L, 4, 2, {1, -1, 2}));
                    parts.push_back(classical_shape(L, 4, {2, 1, -1}));
                  }
                  for (const auto& L : nonabelian_builtins())
                    for (int w = 0; w <= 4; ++w)
                      for (int b = 0; b <= 2; ++b)
                        if (w + b >= 1) parts.push_back(selection_rule_check(L, w, b));
                  return merged("properties", parts);
                }});
  return cs;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult res;
  res.id = c.id;
  res.title = c.title;
  res.time_limit_seconds = c.time_limit_seconds;
  auto start = std::chrono::steady_clock::now();
  try {
    CheckReport rep = c.run();
    res.pass = rep.pass;
    res.details = rep.details;
  } catch (const std::exception& e) {
    res.pass = false;
    res.details.push_back(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.seconds > res.time_limit_seconds) {
    res.pass = false;
    res.details.push_back(fmt::format("time limit exceeded: {:.2f}s > {:.0f}s", res.seconds, res.time_limit_seconds));
  }
  return res;
}

std::string format_result_line(const CriterionResult& r) {
  return fmt::format("[{}] criterion {:>2}: {} ({:.2f}s / {:.0f}s)", r.pass ? "PASS" : "FAIL", r.id, r.title, r.seconds,
                     r.time_limit_seconds);
}

}  // namespace lieweyl
