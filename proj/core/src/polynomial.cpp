#include "lieweyl/polynomial.hpp"

namespace lieweyl {

std::string x_name(int i) { return "x" + std::to_string(i + 1); }

std::string render_polynomial(const Polynomial& f) { return render(f, x_name, DegreeOrder::Descending); }

Polynomial x_var(int n, int i) { return SparsePoly::variable(n, i); }

Polynomial x_monomial(int n, const Monomial& m, const Rational& c) { return SparsePoly::term(n, m, c); }

namespace {

void split_monomial(const Monomial& e, int n, int i, Monomial& left, Monomial& right, const Rational& c,
                    SparsePoly& out) {
  if (i == n) {
    Monomial m;
    for (int v = 0; v < n; ++v) {
      m.e[static_cast<std::size_t>(v)] = left.e[static_cast<std::size_t>(v)];
      m.e[static_cast<std::size_t>(v + n)] = right.e[static_cast<std::size_t>(v)];
    }
    out.add_term(m, c);
    return;
  }
  for (int k = 0; k <= e[i]; ++k) {
    left.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    right.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e[i] - k);
    split_monomial(e, n, i + 1, left, right, c * binomial(e[i], k), out);
  }
}

void collect_monomials(int n, int i, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (i == n - 1) {
    cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    collect_monomials(n, i + 1, remaining - k, cur, out);
  }
}

}  // namespace

SparsePoly polynomial_coproduct(const Polynomial& f) {
  int n = f.nvars();
  SparsePoly out(2 * n);
  for (const auto& [m, c] : f) {
    Monomial left, right;
    split_monomial(m, n, 0, left, right, c, out);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  collect_monomials(n, 0, d, cur, out);
  return out;
}

}  // namespace lieweyl
