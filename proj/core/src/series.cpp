#include "lieweyl/series.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "lieweyl/bernoulli.hpp"

namespace lieweyl {

namespace {

void require_same(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n() != b.n()) throw std::invalid_argument("series in different numbers of variables");
  if (a.cutoff() != b.cutoff())
    throw std::invalid_argument(fmt::format("series cutoff mismatch ({} vs {})", a.cutoff(), b.cutoff()));
}

}  // namespace

std::string d_name(int i) { return "d" + std::to_string(i + 1); }

TruncatedSeries::TruncatedSeries(int n, int cutoff) : cutoff_(cutoff), poly_(n) {
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
}

TruncatedSeries::TruncatedSeries(SparsePoly p, int cutoff) : cutoff_(cutoff), poly_(p.truncated(cutoff)) {
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
}

TruncatedSeries TruncatedSeries::constant(int n, int cutoff, const Rational& c) {
  return TruncatedSeries(SparsePoly::constant(n, c), cutoff);
}

TruncatedSeries TruncatedSeries::variable(int n, int cutoff, int i, const Rational& c) {
  return TruncatedSeries(SparsePoly::variable(n, i, c), cutoff);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same(*this, o);
  poly_ += o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same(*this, o);
  poly_ -= o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same(a, b);
  TruncatedSeries r(a.n(), a.cutoff());
  r.poly_ = multiply_truncated(a.poly_, b.poly_, 0, a.n(), a.cutoff());
  return r;
}

TruncatedSeries TruncatedSeries::partial(int rho) const {
  if (cutoff_ < 1) throw CutoffError("cannot differentiate a series known only to degree 0");
  return TruncatedSeries(poly_.derivative(rho), cutoff_ - 1);
}

TruncatedSeries TruncatedSeries::with_cutoff(int cutoff) const {
  if (cutoff > cutoff_) throw CutoffError(fmt::format("cannot raise cutoff {} to {}", cutoff_, cutoff));
  return TruncatedSeries(poly_, cutoff);
}

std::string TruncatedSeries::render() const { return lieweyl::render(poly_, d_name, DegreeOrder::Ascending); }

SeriesMatrix::SeriesMatrix(int n, int cutoff)
    : n_(n), cutoff_(cutoff), entries_(static_cast<std::size_t>(n * n), TruncatedSeries(n, cutoff)) {}

SeriesMatrix SeriesMatrix::identity(int n, int cutoff) {
  SeriesMatrix m(n, cutoff);
  for (int i = 0; i < n; ++i) m.at(i, i) = TruncatedSeries::constant(n, cutoff, 1);
  return m;
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  SeriesMatrix r(a.n_, a.cutoff_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int k = 0; k < a.n_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

SeriesMatrix SeriesMatrix::with_cutoff(int cutoff) const {
  SeriesMatrix r(n_, cutoff);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].with_cutoff(cutoff);
  return r;
}

SeriesMatrix c_matrix(const LieAlgebra& L, int cutoff) {
  int n = L.dim();
  SeriesMatrix m(n, cutoff);
  if (cutoff < 1) return m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparsePoly p(n);
      for (int k = 0; k < n; ++k) p.add_term(Monomial::var(k), L.c(j, k, i));
      m.at(i, j) = TruncatedSeries(p, cutoff);
    }
  return m;
}

SeriesMatrix phi_symmetric(const LieAlgebra& L, int cutoff) {
  int n = L.dim();
  SeriesMatrix phi = SeriesMatrix::identity(n, cutoff);
  SeriesMatrix C = c_matrix(L, cutoff);
  SeriesMatrix power = SeriesMatrix::identity(n, cutoff);
  for (int N = 1; N <= cutoff; ++N) {
    power = power * C;
    Rational w = phi_weight(N);
    if (sgn(w) == 0) continue;
    SeriesMatrix term = power;
    term *= w;
    phi += term;
  }
  return phi;
}

CheckReport verify_phi_equation(const LieAlgebra& L, const SeriesMatrix& phi) {
  CheckReport r;
  r.name = fmt::format("phi equation ({}, cutoff {})", L.name(), phi.cutoff());
  int n = L.dim();
  if (phi.n() != n) throw std::invalid_argument("phi matrix does not match the algebra dimension");
  if (phi.cutoff() < 1) throw CutoffError("phi equation needs cutoff >= 1");
  int D = phi.cutoff() - 1;
  SeriesMatrix low = phi.with_cutoff(D);
  // dphi[l][k*n+i] = d_l phi^k_i
  std::vector<std::vector<TruncatedSeries>> dphi(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) dphi[static_cast<std::size_t>(l)].push_back(phi.at(k, i).partial(l));
  auto d = [&](int l, int k, int i) -> const TruncatedSeries& {
    return dphi[static_cast<std::size_t>(l)][static_cast<std::size_t>(k * n + i)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        TruncatedSeries lhs(n, D), rhs(n, D);
        for (int l = 0; l < n; ++l) {
          lhs += low.at(l, j) * d(l, k, i);
          lhs -= low.at(l, i) * d(l, k, j);
        }
        for (int s = 0; s < n; ++s)
          if (sgn(L.c(i, j, s)) != 0) rhs += low.at(k, s) * L.c(i, j, s);
        if (!(lhs == rhs))
          r.fail(fmt::format("(i,j,k)=({},{},{}) residual {}", i + 1, j + 1, k + 1, (lhs - rhs).render()));
      }
  if (r.pass) r.note(fmt::format("holds through degree {}", D));
  return r;
}

}  // namespace lieweyl
