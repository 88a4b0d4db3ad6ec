#include "lieweyl/star.hpp"

#include <fmt/format.h>

#include <map>
#include <stdexcept>

#include "lieweyl/bernoulli.hpp"
#include "lieweyl/hausdorff.hpp"

namespace lieweyl {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

SparsePoly derivative_power(const SparsePoly& f, const Monomial& a, int offset, int n) {
  SparsePoly r = f;
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < a[offset + i] && !r.is_zero(); ++e) r = r.derivative(i);
  return r;
}

}  // namespace

CoproductStar::CoproductStar(const CoproductTable& table) {
  if (table.empty()) throw std::invalid_argument("empty coproduct table");
  n_ = table.front().n();
  max_degree_ = table.front().cutoff();
  for (const auto& t : table) max_degree_ = std::min(max_degree_, t.cutoff());
  int n = n_;
  // Z = sum_l x_l (Delta d^l - 1 (x) d^l - d^l (x) 1)
  SparsePoly Z(3 * n);
  for (int l = 0; l < n; ++l) {
    SparsePoly A = table[at(l)].poly();
    A.add_term(Monomial::var(l), -1);
    A.add_term(Monomial::var(n + l), -1);
    Z += SparsePoly::variable(3 * n, l) * A.embedded(3 * n, n);
  }
  kernel_ = SparsePoly::constant(3 * n, 1);
  SparsePoly power = kernel_;
  for (int m = 1; 2 * m <= max_degree_; ++m) {
    power = multiply_truncated(power, Z, n, 3 * n, max_degree_);
    if (power.is_zero()) break;
    kernel_ += power * (Rational(1) / factorial(m));
  }
}

Polynomial CoproductStar::star(const Polynomial& f, const Polynomial& g) const {
  int n = n_;
  int df = std::max(0, f.degree()), dg = std::max(0, g.degree());
  if (df + dg > max_degree_)
    throw CutoffError(fmt::format("coproduct table reaches degree {}, star needs {}", max_degree_, df + dg));
  std::map<Monomial, SparsePoly> left_cache, right_cache;
  auto cached = [&](std::map<Monomial, SparsePoly>& cache, const SparsePoly& p, const Monomial& key, int offset) {
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, derivative_power(p, key, offset, n)).first;
    return it->second;
  };
  Polynomial out(n);
  for (const auto& [m, c] : kernel_) {
    if (m.degree(n, 2 * n) > df || m.degree(2 * n, 3 * n) > dg) continue;
    Monomial a, b, x;
    for (int i = 0; i < n; ++i) {
      x.e[at(i)] = m.e[at(i)];
      a.e[at(n + i)] = m.e[at(n + i)];
      b.e[at(2 * n + i)] = m.e[at(2 * n + i)];
    }
    SparsePoly fa = cached(left_cache, f, a, n);
    if (fa.is_zero()) continue;
    SparsePoly gb = cached(right_cache, g, b, 2 * n);
    if (gb.is_zero()) continue;
    out += SparsePoly::term(n, x, c) * fa * gb;
  }
  return out;
}

Polynomial star_coproduct(const LieAlgebra& L, const SeriesMatrix& phi, const Polynomial& f, const Polynomial& g) {
  int P = std::max(0, f.degree()) + std::max(0, g.degree());
  return CoproductStar(coproduct_adjoint_table(L, phi, P)).star(f, g);
}

StarReport star_exponential(const LieAlgebra& L, const std::vector<Rational>& k, const std::vector<Rational>& q,
                            int P) {
  int n = L.dim();
  if (static_cast<int>(k.size()) != n || static_cast<int>(q.size()) != n)
    throw std::invalid_argument("coefficient vectors must match the algebra dimension");
  StarReport rep;
  auto vec_str = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
  };

  auto linear = [n](const std::vector<Rational>& v) {
    Polynomial p(n);
    for (int i = 0; i < n; ++i) p.add_term(Monomial::var(i), v[at(i)]);
    return p;
  };
  // Graded pieces of exp(t k.x) and exp(t q.x).
  std::vector<Polynomial> ek{SparsePoly::constant(n, 1)}, eq{SparsePoly::constant(n, 1)};
  Polynomial kx = linear(k), qx = linear(q);
  for (int m = 1; m <= P; ++m) {
    ek.push_back(ek.back() * kx * (Rational(1, m)));
    eq.push_back(eq.back() * qx * (Rational(1, m)));
  }

  // Right side: exp(sum_N t^N D_N(k,q).x), via m E_m = sum_N N g_N E_{m-N}.
  auto D = dynkin_D(L, std::max(P, 1));
  std::vector<Polynomial> g{Polynomial(n)};
  {
    std::vector<Rational> point(k.begin(), k.end());
    point.insert(point.end(), q.begin(), q.end());
    for (int N = 1; N <= P; ++N) {
      Polynomial gN(n);
      for (int mu = 0; mu < n; ++mu) {
        Rational val = 0;
        for (const auto& [m, c] : D[at(N - 1)][at(mu)]) {
          Rational t = c;
          for (int i = 0; i < 2 * n; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[at(i)];
          val += t;
        }
        gN.add_term(Monomial::var(mu), val);
      }
      g.push_back(gN);
    }
  }
  std::vector<Polynomial> E{SparsePoly::constant(n, 1)};
  for (int m = 1; m <= P; ++m) {
    Polynomial e(n);
    for (int N = 1; N <= m; ++N) e += g[at(N)] * E[at(m - N)] * Rational(N);
    E.push_back(e * Rational(1, m));
  }

  CoproductStar cstar(coproduct_adjoint_table(L, phi_symmetric(L, P), P));
  PbwStar pstar(L, P);
  for (int m = 0; m <= P; ++m) {
    Polynomial viaC(n), viaP(n);
    for (int j = 0; j <= m; ++j) {
      viaC += cstar.star(ek[at(j)], eq[at(m - j)]);
      viaP += pstar.star(ek[at(j)], eq[at(m - j)]);
    }
    bool okC = viaC == E[at(m)], okP = viaP == E[at(m)];
    rep.lines.push_back(fmt::format("k=({}) q=({}) degree {}: coproduct {} pbw {}", vec_str(k), vec_str(q), m,
                                    okC ? "ok" : "MISMATCH", okP ? "ok" : "MISMATCH"));
    if (!okC || !okP) {
      rep.pass = false;
      rep.lines.push_back("  expected " + render_polynomial(E[at(m)]));
      if (!okC) rep.lines.push_back("  coproduct " + render_polynomial(viaC));
      if (!okP) rep.lines.push_back("  pbw " + render_polynomial(viaP));
    }
  }
  return rep;
}

CheckReport star_associativity_check(const LieAlgebra& L, const Polynomial& f, const Polynomial& g,
                                     const Polynomial& h) {
  CheckReport r;
  r.name = fmt::format("star associativity ({})", L.name());
  int P = std::max(0, f.degree()) + std::max(0, g.degree()) + std::max(0, h.degree());
  PbwStar pstar(L, P);
  CoproductStar cstar(coproduct_adjoint_table(L, phi_symmetric(L, P), P));
  Polynomial p1 = pstar.star(pstar.star(f, g), h), p2 = pstar.star(f, pstar.star(g, h));
  if (!(p1 == p2)) r.fail(fmt::format("pbw route: {} vs {}", render_polynomial(p1), render_polynomial(p2)));
  Polynomial c1 = cstar.star(cstar.star(f, g), h), c2 = cstar.star(f, cstar.star(g, h));
  if (!(c1 == c2)) r.fail(fmt::format("coproduct route: {} vs {}", render_polynomial(c1), render_polynomial(c2)));
  if (!(p1 == c1)) r.fail("routes disagree");
  return r;
}

WeylOperator m_operator(const LieAlgebra& L, int tau, int cutoff) {
  int n = L.dim();
  SparsePoly p(2 * n);
  for (int l = 0; l < n; ++l)
    for (int mu = 0; mu < n; ++mu) {
      const Rational& c = L.c(tau, mu, l);
      if (sgn(c) == 0) continue;
      p.add_term(Monomial::var(l) * Monomial::var(n + mu), c);
    }
  return WeylOperator(n, cutoff, p);
}

std::vector<SparsePoly> chi_series(const LieAlgebra& L, int mu, int nu, int cutoff) {
  int n = L.dim();
  SeriesMatrix C = c_matrix(L, cutoff);
  SeriesMatrix power = SeriesMatrix::identity(n, cutoff);  // C^{N-1}
  std::vector<SparsePoly> chi(at(n), SparsePoly(n));
  for (int N = 1; N <= cutoff; ++N) {
    if (N > 1) power = power * C;
    Rational a = phi_weight(N);
    if (sgn(a) == 0) continue;
    for (int tau = 0; tau < n; ++tau) {
      SparsePoly term(n);
      for (int alpha = 0; alpha < n; ++alpha) {
        const Rational& c = L.c(mu, alpha, tau);
        if (sgn(c) != 0) term += power.at(alpha, nu).poly() * c;
        SparsePoly d = power.at(tau, nu).poly().derivative(alpha);
        if (!d.is_zero()) term -= d * C.at(alpha, mu).poly();
      }
      chi[at(tau)] += term * a;
    }
  }
  return chi;
}

CheckReport chi_check(const LieAlgebra& L, int mu, int nu, const Polynomial& f, int cutoff) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("chi ({}) mu={} nu={} f={}", L.name(), mu + 1, nu + 1, render_polynomial(f));
  if (cutoff < std::max(2, f.degree() + 1))
    throw CutoffError(fmt::format("chi check needs cutoff >= {}", std::max(2, f.degree() + 1)));
  SeriesMatrix phi = phi_symmetric(L, cutoff);
  WeylOperator Xnu = realize_generator(phi, nu);
  WeylOperator M = m_operator(L, mu, cutoff);
  Polynomial lhs = apply(M, apply(Xnu, f)) - apply(Xnu, apply(M, f));

  Polynomial Mx(n);
  for (int l = 0; l < n; ++l) Mx.add_term(Monomial::var(l), L.c(mu, nu, l));
  Polynomial rhs = Mx * f;
  auto chi = chi_series(L, mu, nu, cutoff);
  SeriesMatrix C = c_matrix(L, cutoff);
  SparsePoly op(2 * n);
  for (int l = 0; l < n; ++l)
    for (int tau = 0; tau < n; ++tau) {
      SparsePoly prod = C.at(l, tau).poly() * chi[at(tau)];
      if (prod.is_zero()) continue;
      op += SparsePoly::variable(2 * n, l) * prod.embedded(2 * n, n);
    }
  rhs += apply(WeylOperator(n, cutoff, op), f);
  if (!(lhs == rhs)) r.fail(fmt::format("lhs {} rhs {}", render_polynomial(lhs), render_polynomial(rhs)));
  return r;
}

CheckReport chi_check_all(const LieAlgebra& L, int maxdeg, int cutoff) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("chi identity ({}, f degree <= {}, cutoff {})", L.name(), maxdeg, cutoff);
  int checked = 0;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int d = 0; d <= maxdeg; ++d)
        for (const auto& m : monomials_of_degree(n, d)) {
          auto sub = chi_check(L, mu, nu, x_monomial(n, m), cutoff);
          ++checked;
          if (!sub.pass) r.absorb(sub);
        }
  r.note(fmt::format("{} cases", checked));
  return r;
}

CheckReport star_routes_check(const LieAlgebra& L, int maxdeg) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("star routes ({}, total degree <= {})", L.name(), maxdeg);
  PbwStar pstar(L, maxdeg);
  CoproductStar cstar(coproduct_adjoint_table(L, phi_symmetric(L, maxdeg), maxdeg));
  CoproductStar tstar(coproduct_trees_table(L, maxdeg));
  int pairs = 0;
  for (int df = 0; df <= maxdeg; ++df)
    for (int dg = 0; df + dg <= maxdeg; ++dg)
      for (const auto& mf : monomials_of_degree(n, df))
        for (const auto& mg : monomials_of_degree(n, dg)) {
          Polynomial f = x_monomial(n, mf), g = x_monomial(n, mg);
          Polynomial p = pstar.star(f, g);
          Polynomial c = cstar.star(f, g);
          Polynomial t = tstar.star(f, g);
          ++pairs;
          if (!(p == c) || !(p == t))
            r.fail(fmt::format("{} * {}: pbw {} coproduct {} trees {}", render_polynomial(f), render_polynomial(g),
                               render_polynomial(p), render_polynomial(c), render_polynomial(t)));
        }
  r.note(fmt::format("{} monomial pairs", pairs));
  return r;
}

}  // namespace lieweyl
