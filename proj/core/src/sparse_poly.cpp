#include "lieweyl/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lieweyl {

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
}

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i, const Rational& c) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  SparsePoly p(nvars);
  p.add_term(Monomial::var(i), c);
  return p;
}

SparsePoly SparsePoly::term(int nvars, const Monomial& m, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(m, c);
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::degree() const { return degree(0, nvars_); }

int SparsePoly::degree(int lo, int hi) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(lo, hi));
  return d;
}

int SparsePoly::min_degree(int lo, int hi) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = m.degree(lo, hi);
    if (d < 0 || k < d) d = k;
  }
  return d;
}

static void check_ring(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different rings");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  return multiply_truncated(a, b, 0, a.nvars(), -1);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SparsePoly SparsePoly::truncated(int lo, int hi, int maxdeg) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree(lo, hi) <= maxdeg) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

SparsePoly SparsePoly::homogeneous_part(int lo, int hi, int d) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree(lo, hi) == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial n = m;
    n.bump(var, -1);
    r.add_term(n, c * e);
  }
  return r;
}

SparsePoly SparsePoly::embedded(int new_nvars, int offset) const {
  if (offset < 0 || offset + nvars_ > new_nvars) throw std::invalid_argument("embedding does not fit");
  SparsePoly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    for (int i = 0; i < nvars_; ++i) n.e[static_cast<std::size_t>(i + offset)] = m.e[static_cast<std::size_t>(i)];
    r.add_term(n, c);
  }
  return r;
}

SparsePoly SparsePoly::extracted(int lo, int count) const {
  SparsePoly r(count);
  for (const auto& [m, c] : terms_) {
    if (m.degree() != m.degree(lo, lo + count))
      throw std::invalid_argument("extracted polynomial depends on other variables");
    Monomial n;
    for (int i = 0; i < count; ++i) n.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i + lo)];
    r.add_term(n, c);
  }
  return r;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images, int maxdeg) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
  int target = images.empty() ? 0 : images.front().nvars();
  SparsePoly r(target);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = SparsePoly::constant(target, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = multiply_truncated(t, power_truncated(images[static_cast<std::size_t>(i)], m[i], 0, target, maxdeg),
                                       0, target, maxdeg);
    r += t;
  }
  return r;
}

SparsePoly multiply_truncated(const SparsePoly& a, const SparsePoly& b, int lo, int hi, int maxdeg) {
  check_ring(a, b);
  SparsePoly r(a.nvars());
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> bt;
  bt.reserve(b.size());
  for (const auto& t : b.terms()) bt.emplace_back(t.first.degree(lo, hi), &t);
  Rational prod;
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree(lo, hi);
    for (const auto& [db, tb] : bt) {
      if (maxdeg >= 0 && da + db > maxdeg) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), tb->second.get_mpq_t());
      r.add_term(ma * tb->first, prod);
    }
  }
  return r;
}

SparsePoly power_truncated(const SparsePoly& a, int k, int lo, int hi, int maxdeg) {
  SparsePoly r = SparsePoly::constant(a.nvars(), 1);
  SparsePoly base = a;
  while (k > 0) {
    if (k & 1) r = multiply_truncated(r, base, lo, hi, maxdeg);
    k >>= 1;
    if (k) base = multiply_truncated(base, base, lo, hi, maxdeg);
  }
  return r;
}

std::vector<std::pair<Monomial, Rational>> graded_terms(const SparsePoly& p, DegreeOrder order) {
  std::vector<std::pair<Monomial, Rational>> out(p.begin(), p.end());
  std::stable_sort(out.begin(), out.end(), [order](const auto& x, const auto& y) {
    int dx = x.first.degree(), dy = y.first.degree();
    if (dx != dy) return order == DegreeOrder::Ascending ? dx < dy : dx > dy;
    return x.first > y.first;
  });
  return out;
}

std::string render_monomial(const Monomial& m, int nvars, const std::function<std::string(int)>& var_name) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += var_name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string render(const SparsePoly& p, const std::function<std::string(int)>& var_name, DegreeOrder order) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : graded_terms(p, order)) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + '*';
      s += render_monomial(m, p.nvars(), var_name);
    }
  }
  return s;
}

}  // namespace lieweyl
