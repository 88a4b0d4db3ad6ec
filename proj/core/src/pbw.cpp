#include "lieweyl/pbw.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace lieweyl {

namespace {

int lowest_index(const Monomial& m, int n) {
  for (int i = 0; i < n; ++i)
    if (m[i]) return i;
  return -1;
}

std::string pbw_name(int i) { return "X" + std::to_string(i + 1); }

}  // namespace

std::string PbwElement::render() const { return lieweyl::render(poly, pbw_name, DegreeOrder::Descending); }

Envelope::Envelope(LieAlgebra L) : L_(std::move(L)) {}

SparsePoly Envelope::left_mul_monomial(int i, const Monomial& m) const {
  int n = L_.dim();
  int j = lowest_index(m, n);
  if (j < 0 || i <= j) {
    Monomial r = m;
    r.bump(i);
    return SparsePoly::term(n, r, 1);
  }
  auto key = std::make_pair(i, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // X_i X_j m' = X_j (X_i m') + C^k_{ij} X_k m'
  Monomial rest = m;
  rest.bump(j, -1);
  SparsePoly out(n);
  for (const auto& [t, c] : left_mul_monomial(i, rest)) {
    SparsePoly part = left_mul_monomial(j, t);
    part *= c;
    out += part;
  }
  for (const auto& [k, c] : L_.bracket(i, j)) {
    SparsePoly part = left_mul_monomial(k, rest);
    part *= c;
    out += part;
  }
  memo_.emplace(key, out);
  return out;
}

PbwElement Envelope::left_mul_generator(int i, const PbwElement& u) const {
  SparsePoly out(n());
  for (const auto& [m, c] : u.poly) {
    SparsePoly part = left_mul_monomial(i, m);
    part *= c;
    out += part;
  }
  return PbwElement(out);
}

PbwElement Envelope::mul(const PbwElement& a, const PbwElement& b) const {
  int nn = n();
  if (a.n() != nn || b.n() != nn) throw std::invalid_argument("PBW element dimension mismatch");
  SparsePoly out(nn);
  for (const auto& [m, c] : a.poly) {
    PbwElement v = b;
    for (int i = nn - 1; i >= 0; --i)
      for (int e = 0; e < m[i]; ++e) v = left_mul_generator(i, v);
    v.poly *= c;
    out += v.poly;
  }
  return PbwElement(out);
}

PbwElement Envelope::word(const std::vector<int>& letters) const {
  PbwElement v = PbwElement::one(n());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = left_mul_generator(*it, v);
  return v;
}

PbwElement Envelope::coexp_xi(const Polynomial& f) const {
  int nn = n();
  if (f.nvars() != nn) throw std::invalid_argument("polynomial dimension mismatch");
  SparsePoly out(nn);
  for (const auto& [m, c] : f) {
    std::vector<int> letters;
    Rational weight = c / factorial(m.degree());
    for (int i = 0; i < nn; ++i) {
      letters.insert(letters.end(), static_cast<std::size_t>(m[i]), i);
      weight *= factorial(m[i]);
    }
    // Distinct arrangements each stand for prod e_i! permutations.
    SparsePoly sum(nn);
    do {
      sum += word(letters).poly;
    } while (std::next_permutation(letters.begin(), letters.end()));
    sum *= weight;
    out += sum;
  }
  return PbwElement(out);
}

Realization::Realization(const LieAlgebra& L, SeriesMatrix phi) : phi_(std::move(phi)) {
  if (phi_.n() != L.dim()) throw std::invalid_argument("phi matrix does not match the algebra dimension");
  for (int i = 0; i < L.dim(); ++i) gens_.push_back(realize_generator(phi_, i));
}

Polynomial Realization::theta_monomial(const Monomial& m) const {
  int n = phi_.n();
  int j = lowest_index(m, n);
  if (j < 0) return SparsePoly::constant(n, 1);
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  Monomial rest = m;
  rest.bump(j, -1);
  Polynomial r = apply(gens_[static_cast<std::size_t>(j)], theta_monomial(rest));
  memo_.emplace(m, r);
  return r;
}

Polynomial Realization::theta(const PbwElement& u) const {
  if (u.degree() > phi_.cutoff())
    throw CutoffError(fmt::format("realization cutoff {} too small for degree {}", phi_.cutoff(), u.degree()));
  Polynomial out(phi_.n());
  for (const auto& [m, c] : u.poly) out += theta_monomial(m) * c;
  return out;
}

DeformedCalculus::DeformedCalculus(const Envelope& env, SeriesMatrix phi) : env_(env), phi_(std::move(phi)) {
  if (phi_.n() != env.n()) throw std::invalid_argument("phi matrix does not match the algebra dimension");
}

const SparsePoly& DeformedCalculus::partial_monomial(int mu, const Monomial& m) const {
  auto key = std::make_pair(mu, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  int n = env_.n();
  int nu = lowest_index(m, n);
  SparsePoly out(n);
  if (nu >= 0) {
    Monomial rest = m;
    rest.bump(nu, -1);
    if (rest.degree() > phi_.cutoff())
      throw CutoffError(
          fmt::format("phi cutoff {} too small for deformed derivative of degree {}", phi_.cutoff(), m.degree()));
    PbwElement tail = PbwElement(SparsePoly::term(n, rest, 1));
    out += evaluate(phi_.at(mu, nu).poly(), tail).poly;
    PbwElement inner(partial_monomial(mu, rest));
    out += env_.left_mul_generator(nu, inner).poly;
  }
  return memo_.emplace(key, out).first->second;
}

PbwElement DeformedCalculus::partial(int mu, const PbwElement& u) const {
  SparsePoly out(env_.n());
  for (const auto& [m, c] : u.poly) out += partial_monomial(mu, m) * c;
  return PbwElement(out);
}

PbwElement DeformedCalculus::partial_power(const Monomial& a, const PbwElement& u) const {
  PbwElement v = u;
  for (int i = 0; i < env_.n(); ++i)
    for (int e = 0; e < a[i]; ++e) {
      if (v.poly.is_zero()) return v;
      v = partial(i, v);
    }
  return v;
}

PbwElement DeformedCalculus::evaluate(const SparsePoly& s, const PbwElement& u) const {
  int deg = u.degree();
  SparsePoly out(env_.n());
  for (const auto& [a, c] : s) {
    if (a.degree() > deg) continue;
    out += partial_power(a, u).poly * c;
  }
  return PbwElement(out);
}

PbwElement pbw_mul(const LieAlgebra& L, const PbwElement& a, const PbwElement& b) { return Envelope(L).mul(a, b); }

PbwElement coexp_xi(const LieAlgebra& L, const Polynomial& f) { return Envelope(L).coexp_xi(f); }

Polynomial xi_inverse(const LieAlgebra& L, const SeriesMatrix& phi, const PbwElement& u) {
  return Realization(L, phi).theta(u);
}

PbwElement deformed_partial(const LieAlgebra& L, const SeriesMatrix& phi, int mu, const PbwElement& u) {
  Envelope env(L);
  return DeformedCalculus(env, phi).partial(mu, u);
}

PbwElement evaluate_series_at_deformed(const LieAlgebra& L, const SeriesMatrix& phi, const TruncatedSeries& s,
                                       const PbwElement& u) {
  Envelope env(L);
  return DeformedCalculus(env, phi).evaluate(s.poly(), u);
}

PbwStar::PbwStar(const LieAlgebra& L, int cutoff) : env_(L), real_(L, phi_symmetric(L, cutoff)) {}

Polynomial PbwStar::star(const Polynomial& f, const Polynomial& g) const {
  return real_.theta(env_.mul(env_.coexp_xi(f), env_.coexp_xi(g)));
}

Polynomial star_pbw(const LieAlgebra& L, const SeriesMatrix& phi, const Polynomial& f, const Polynomial& g) {
  int need = std::max(0, f.degree()) + std::max(0, g.degree());
  if (phi.cutoff() < need)
    throw CutoffError(fmt::format("star product needs cutoff >= {}, have {}", need, phi.cutoff()));
  Envelope env(L);
  return Realization(L, phi).theta(env.mul(env.coexp_xi(f), env.coexp_xi(g)));
}

}  // namespace lieweyl
