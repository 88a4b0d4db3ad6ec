#include "lieweyl/weyl.hpp"

#include <stdexcept>

namespace lieweyl {

namespace {

void require_same(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Weyl operators over different dimensions");
  if (a.cutoff() != b.cutoff()) throw std::invalid_argument("Weyl operator cutoff mismatch");
}

// Falling factorial c (c-1) ... (c-k+1).
Rational falling(int c, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= c - t;
  return r;
}

// d^b x^c = sum_k prod_i binom(b_i, k_i) falling(c_i, k_i) x^(c-k) d^(b-k), recursion over i.
void reorder(const Monomial& b, const Monomial& c, int n, int i, Monomial& kk, const Rational& coeff,
             std::vector<std::pair<Monomial, Rational>>& out) {
  if (i == n) {
    out.emplace_back(kk, coeff);
    return;
  }
  int top = std::min(b[i], c[i]);
  for (int k = 0; k <= top; ++k) {
    kk.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    reorder(b, c, n, i + 1, kk, coeff * binomial(b[i], k) * falling(c[i], k), out);
  }
  kk.e[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

WeylOperator::WeylOperator(int n, int cutoff) : n_(n), cutoff_(cutoff), poly_(2 * n) {}

WeylOperator::WeylOperator(int n, int cutoff, SparsePoly p)
    : n_(n), cutoff_(cutoff), poly_(p.truncated(n, 2 * n, cutoff)) {
  if (p.nvars() != 2 * n) throw std::invalid_argument("Weyl operator polynomial must have 2n variables");
}

WeylOperator WeylOperator::x(int n, int cutoff, int i) {
  return WeylOperator(n, cutoff, SparsePoly::variable(2 * n, i));
}

WeylOperator WeylOperator::d(int n, int cutoff, int i) {
  return WeylOperator(n, cutoff, SparsePoly::variable(2 * n, n + i));
}

WeylOperator WeylOperator::constant(int n, int cutoff, const Rational& c) {
  return WeylOperator(n, cutoff, SparsePoly::constant(2 * n, c));
}

WeylOperator WeylOperator::from_polynomial(const Polynomial& f, int cutoff) {
  return WeylOperator(f.nvars(), cutoff, f.embedded(2 * f.nvars(), 0));
}

WeylOperator WeylOperator::from_series(const TruncatedSeries& s) {
  return WeylOperator(s.n(), s.cutoff(), s.poly().embedded(2 * s.n(), s.n()));
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  require_same(*this, o);
  poly_ += o.poly_;
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  require_same(*this, o);
  poly_ -= o.poly_;
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

WeylOperator WeylOperator::with_cutoff(int cutoff) const { return WeylOperator(n_, cutoff, poly_); }

std::string WeylOperator::render() const {
  int n = n_;
  return lieweyl::render(poly_, [n](int i) { return i < n ? x_name(i) : d_name(i - n); }, DegreeOrder::Descending);
}

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b) {
  require_same(a, b);
  int n = a.n();
  int D = a.cutoff();
  WeylOperator r(n, D);
  SparsePoly acc(2 * n);
  std::vector<std::pair<Monomial, Rational>> moves;
  for (const auto& [ma, ca] : a.poly()) {
    Monomial xa, da;
    for (int i = 0; i < n; ++i) {
      xa.e[static_cast<std::size_t>(i)] = ma.e[static_cast<std::size_t>(i)];
      da.e[static_cast<std::size_t>(i)] = ma.e[static_cast<std::size_t>(n + i)];
    }
    int dega = da.degree();
    for (const auto& [mb, cb] : b.poly()) {
      Monomial xb, db;
      for (int i = 0; i < n; ++i) {
        xb.e[static_cast<std::size_t>(i)] = mb.e[static_cast<std::size_t>(i)];
        db.e[static_cast<std::size_t>(i)] = mb.e[static_cast<std::size_t>(n + i)];
      }
      int degb = db.degree();
      moves.clear();
      Monomial kk;
      reorder(da, xb, n, 0, kk, ca * cb, moves);
      for (const auto& [k, c] : moves) {
        if (dega - k.degree() + degb > D) continue;
        Monomial m;
        for (int i = 0; i < n; ++i) {
          m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(xa[i] + xb[i] - k[i]);
          m.e[static_cast<std::size_t>(n + i)] = static_cast<std::uint8_t>(da[i] - k[i] + db[i]);
        }
        acc.add_term(m, c);
      }
    }
  }
  return WeylOperator(n, D, acc);
}

WeylOperator weyl_commutator(const WeylOperator& a, const WeylOperator& b) { return weyl_mul(a, b) - weyl_mul(b, a); }

SparsePoly apply_on_block(const WeylOperator& A, const SparsePoly& F, int offset) {
  int n = A.n();
  if (offset < 0 || offset + n > F.nvars()) throw std::invalid_argument("operator block outside polynomial ring");
  SparsePoly out(F.nvars());
  for (const auto& [mf, cf] : F) {
    for (const auto& [ma, ca] : A.poly()) {
      Rational c = cf * ca;
      Monomial m = mf;
      bool zero = false;
      for (int i = 0; i < n && !zero; ++i) {
        int b = ma[n + i];
        int have = m[offset + i];
        if (b > have) {
          zero = true;
          break;
        }
        c *= falling(have, b);
        m.e[static_cast<std::size_t>(offset + i)] = static_cast<std::uint8_t>(have - b + ma[i]);
      }
      if (!zero) out.add_term(m, c);
    }
  }
  return out;
}

Polynomial apply(const WeylOperator& A, const Polynomial& f) {
  if (f.nvars() != A.n()) throw std::invalid_argument("operator and polynomial dimensions differ");
  return apply_on_block(A, f, 0);
}

Polynomial vacuum(const WeylOperator& A) { return apply(A, SparsePoly::constant(A.n(), 1)); }

WeylOperator realize_generator(const SeriesMatrix& phi, int i) {
  int n = phi.n();
  WeylOperator r(n, phi.cutoff());
  for (int b = 0; b < n; ++b)
    r += weyl_mul(WeylOperator::x(n, phi.cutoff(), b), WeylOperator::from_series(phi.at(b, i)));
  return r;
}

}  // namespace lieweyl
