#include "lieweyl/feynman.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "lieweyl/bernoulli.hpp"

namespace lieweyl {

SparsePoly TensorSeries::component(int mu, const std::vector<int>& alpha) const {
  auto it = components.find(alpha);
  if (it == components.end()) return SparsePoly(n);
  return it->second[static_cast<std::size_t>(mu)];
}

BigradedCoproduct::BigradedCoproduct(int n, int mu, int cutoff) : n_(n), mu_(mu), cutoff_(cutoff), poly_(2 * n) {}

BigradedCoproduct::BigradedCoproduct(int n, int mu, int cutoff, SparsePoly p)
    : n_(n), mu_(mu), cutoff_(cutoff), poly_(p.truncated(cutoff)) {
  if (p.nvars() != 2 * n) throw std::invalid_argument("coproduct polynomial must have 2n variables");
}

SparsePoly BigradedCoproduct::piece(int w, int b) const {
  return poly_.homogeneous_part(0, n_, w).homogeneous_part(n_, 2 * n_, b);
}

SparsePoly BigradedCoproduct::total_piece(int P) const { return poly_.homogeneous_part(P); }

BigradedCoproduct BigradedCoproduct::swapped() const {
  SparsePoly s(2 * n_);
  for (const auto& [m, c] : poly_) {
    Monomial t;
    for (int i = 0; i < n_; ++i) {
      t.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(n_ + i)];
      t.e[static_cast<std::size_t>(n_ + i)] = m.e[static_cast<std::size_t>(i)];
    }
    s.add_term(t, c);
  }
  return BigradedCoproduct(n_, mu_, cutoff_, s);
}

BigradedCoproduct& BigradedCoproduct::operator+=(const BigradedCoproduct& o) {
  if (n_ != o.n_ || mu_ != o.mu_) throw std::invalid_argument("adding coproducts of different generators");
  poly_ += o.poly_.truncated(cutoff_);
  return *this;
}

namespace {

std::vector<std::pair<Monomial, Rational>> tensor_order(const SparsePoly& p, int n) {
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(), [n](const auto& x, const auto& y) {
    int tx = x.first.degree(), ty = y.first.degree();
    if (tx != ty) return tx < ty;
    int lx = x.first.degree(0, n), ly = y.first.degree(0, n);
    if (lx != ly) return lx < ly;
    return x.first > y.first;
  });
  return terms;
}

std::string half_monomial(const Monomial& m, int lo, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    int e = m[lo + i];
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += d_name(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string exponents(const Monomial& m, int lo, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(m[lo + i]);
  return s;
}

}  // namespace

std::string render_tensor(const SparsePoly& p, int n) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : tensor_order(p, n)) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (a != 1) s += to_string(a) + '*';
    s += half_monomial(m, 0, n) + "⊗" + half_monomial(m, n, n);
  }
  return s;
}

std::string BigradedCoproduct::render() const { return render_tensor(poly_, n_); }

std::vector<std::string> BigradedCoproduct::structured() const {
  std::vector<std::string> lines;
  for (const auto& [m, c] : tensor_order(poly_, n_))
    lines.push_back(
        fmt::format("mu={} L={} R={} c={}", mu_ + 1, exponents(m, 0, n_), exponents(m, n_, n_), to_string(c)));
  return lines;
}

namespace {

// Feynman rules: a white node with children c_1..c_s contributes
// (-1)^s B_s/s! [...[[u, v_1], v_2], ..., v_s]; a white leaf is u itself.
LieVector eval_node(const LieAlgebra& L, const PlanarTree& t, const std::function<LieVector(int)>& white_vec,
                    const LieVector& black_vec, int& next_white) {
  if (!t.white) return black_vec;
  LieVector acc = white_vec(next_white++);
  for (const auto& c : t.children) acc = lie_bracket(L, acc, eval_node(L, c, white_vec, black_vec, next_white));
  Rational w = phi_weight(static_cast<int>(t.children.size()));
  for (auto& p : acc) p *= w;
  return acc;
}

LieVector variable_vector(int nvars, int offset, int n) {
  LieVector v;
  for (int i = 0; i < n; ++i) v.push_back(SparsePoly::variable(nvars, offset + i));
  return v;
}

}  // namespace

TensorSeries ev(const LieAlgebra& L, const OrderedTree& t) {
  int n = L.dim();
  TensorSeries out;
  out.n = n;
  out.w = t.tree.whites();
  out.b = t.tree.blacks();
  LieVector black = variable_vector(n, 0, n);
  std::vector<int> alpha(static_cast<std::size_t>(out.w), 0);
  while (true) {
    auto white_vec = [&](int k) {
      LieVector v(static_cast<std::size_t>(n), SparsePoly(n));
      int label = t.labels.at(static_cast<std::size_t>(k));
      v[static_cast<std::size_t>(alpha[static_cast<std::size_t>(label - 1)])] = SparsePoly::constant(n, 1);
      return v;
    };
    int next = 0;
    LieVector val = eval_node(L, t.tree, white_vec, black, next);
    bool nonzero = std::any_of(val.begin(), val.end(), [](const SparsePoly& p) { return !p.is_zero(); });
    if (nonzero) out.components.emplace(alpha, val);
    int pos = out.w - 1;
    while (pos >= 0 && alpha[static_cast<std::size_t>(pos)] == n - 1) alpha[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++alpha[static_cast<std::size_t>(pos)];
  }
  return out;
}

LieVector tree_value(const LieAlgebra& L, const PlanarTree& t) {
  int n = L.dim();
  LieVector left = variable_vector(2 * n, 0, n);
  LieVector right = variable_vector(2 * n, n, n);
  int next = 0;
  return eval_node(L, t, [&](int) { return left; }, right, next);
}

BigradedCoproduct fev(const LieAlgebra& L, const OrderedTree& t, int mu) {
  int n = L.dim();
  TensorSeries e = ev(L, t);
  SparsePoly out(2 * n);
  for (const auto& [alpha, vec] : e.components) {
    Monomial left;
    for (int a : alpha) left.bump(a);
    const SparsePoly& right = vec[static_cast<std::size_t>(mu)];
    for (const auto& [m, c] : right) {
      Monomial full = left;
      for (int i = 0; i < n; ++i) full.e[static_cast<std::size_t>(n + i)] = m.e[static_cast<std::size_t>(i)];
      out.add_term(full, c);
    }
  }
  out *= Rational(1) / factorial(e.w);
  return BigradedCoproduct(n, mu, e.w + e.b, out);
}

BigradedCoproduct fev(const LieAlgebra& L, const PlanarTree& t, int mu) {
  int n = L.dim();
  int w = t.whites();
  SparsePoly p = tree_value(L, t)[static_cast<std::size_t>(mu)];
  p *= Rational(static_cast<unsigned long>(numeration_count(t))) / factorial(w);
  return BigradedCoproduct(n, mu, w + t.blacks(), p);
}

std::vector<TruncatedSeries> nested_commutator(const LieAlgebra& L, const SeriesMatrix& phi,
                                               const std::vector<int>& alpha) {
  int n = L.dim();
  int k = static_cast<int>(alpha.size());
  if (k < 1) throw std::invalid_argument("nested commutator needs at least one generator");
  if (phi.cutoff() < k)
    throw CutoffError(fmt::format("nested commutator of length {} needs cutoff >= {}, have {}", k, k, phi.cutoff()));
  std::vector<TruncatedSeries> cur;
  for (int mu = 0; mu < n; ++mu) cur.push_back(phi.at(mu, alpha[0]));
  for (int step = 1; step < k; ++step) {
    int D = cur.front().cutoff() - 1;
    std::vector<TruncatedSeries> next(static_cast<std::size_t>(n), TruncatedSeries(n, D));
    for (int mu = 0; mu < n; ++mu)
      for (int rho = 0; rho < n; ++rho) {
        TruncatedSeries d = cur[static_cast<std::size_t>(mu)].partial(rho);
        if (d.is_zero()) continue;
        next[static_cast<std::size_t>(mu)] += d * phi.at(rho, alpha[static_cast<std::size_t>(step)]).with_cutoff(D);
      }
    cur = std::move(next);
  }
  return cur;
}

std::string ChainTerm::render() const {
  std::string s;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j) s += ' ';
    s += "phi^" + (j == 0 ? std::string("mu") : "r" + std::to_string(j)) + "_{a" + std::to_string(j + 1);
    for (int r : factors[j]) s += ",r" + std::to_string(r);
    s += '}';
  }
  return s;
}

std::vector<ChainTerm> nested_commutator_expansion(int k) {
  if (k < 1) throw std::invalid_argument("expansion length must be >= 1");
  std::vector<ChainTerm> terms{ChainTerm{{{}}}};
  for (int step = 1; step < k; ++step) {
    std::vector<ChainTerm> next;
    for (const auto& t : terms)
      for (std::size_t f = 0; f < t.factors.size(); ++f) {
        ChainTerm u = t;
        u.factors[f].push_back(step);
        u.factors.emplace_back();
        next.push_back(std::move(u));
      }
    terms = std::move(next);
  }
  return terms;
}

TruncatedSeries evaluate_expansion(const LieAlgebra& L, const SeriesMatrix& phi, const std::vector<ChainTerm>& terms,
                                   const std::vector<int>& alpha, int mu) {
  int n = L.dim();
  int k = static_cast<int>(alpha.size());
  int D = phi.cutoff() - k + 1;
  if (D < 0) throw CutoffError("cutoff too small for the expansion");
  TruncatedSeries total(n, D);
  std::vector<int> r(static_cast<std::size_t>(std::max(0, k - 1)), 0);
  while (true) {
    for (const auto& t : terms) {
      TruncatedSeries prod = TruncatedSeries::constant(n, D, 1);
      for (int j = 0; j < k && !prod.is_zero(); ++j) {
        int upper = j == 0 ? mu : r[static_cast<std::size_t>(j - 1)];
        SparsePoly f = phi.at(upper, alpha[static_cast<std::size_t>(j)]).poly();
        for (int slot : t.factors[static_cast<std::size_t>(j)]) f = f.derivative(r[static_cast<std::size_t>(slot - 1)]);
        prod = prod * TruncatedSeries(f, D);
      }
      total += prod;
    }
    int pos = k - 2;
    while (pos >= 0 && r[static_cast<std::size_t>(pos)] == n - 1) r[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++r[static_cast<std::size_t>(pos)];
  }
  return total;
}

CoproductTable coproduct_trees_table(const LieAlgebra& L, int P) {
  int n = L.dim();
  if (P < 0 || P > kMaxTreeSize) throw std::out_of_range(fmt::format("tree coproduct degree {} outside 0..{}", P, kMaxTreeSize));
  std::vector<SparsePoly> acc(static_cast<std::size_t>(n), SparsePoly(2 * n));
  for (int total = 1; total <= P; ++total)
    for (int w = 0; w <= total; ++w) {
      int b = total - w;
      for (const auto& t : enumerate_trees(w, b)) {
        if (!contributing_filter(t)) continue;
        LieVector v = tree_value(L, t);
        Rational scale = Rational(static_cast<unsigned long>(numeration_count(t))) / factorial(w);
        for (int mu = 0; mu < n; ++mu) acc[static_cast<std::size_t>(mu)] += v[static_cast<std::size_t>(mu)] * scale;
      }
    }
  CoproductTable table;
  for (int mu = 0; mu < n; ++mu) table.emplace_back(n, mu, P, acc[static_cast<std::size_t>(mu)]);
  return table;
}

BigradedCoproduct coproduct_trees(const LieAlgebra& L, int mu, int P) {
  return coproduct_trees_table(L, P).at(static_cast<std::size_t>(mu));
}

CoproductTable coproduct_adjoint_table(const LieAlgebra& L, const SeriesMatrix& phi, int P) {
  int n = L.dim();
  if (phi.cutoff() < P)
    throw CutoffError(fmt::format("adjoint coproduct to degree {} needs cutoff >= {}, have {}", P, P, phi.cutoff()));
  std::vector<SparsePoly> acc(static_cast<std::size_t>(n), SparsePoly(2 * n));
  for (int mu = 0; mu < n; ++mu)
    if (P >= 1) acc[static_cast<std::size_t>(mu)].add_term(Monomial::var(n + mu), 1);

  // Depth-first over alpha tuples; `cur` holds N_k truncated to degree P - k.
  std::function<void(int, Monomial, const LieVector&)> dfs = [&](int k, Monomial left, const LieVector& cur) {
    Rational inv = Rational(1) / factorial(k);
    for (int mu = 0; mu < n; ++mu)
      for (const auto& [m, c] : cur[static_cast<std::size_t>(mu)]) {
        Monomial full = left;
        for (int i = 0; i < n; ++i) full.e[static_cast<std::size_t>(n + i)] = m.e[static_cast<std::size_t>(i)];
        acc[static_cast<std::size_t>(mu)].add_term(full, c * inv);
      }
    if (k + 1 > P) return;
    int maxdeg = P - k - 1;
    std::vector<LieVector> derivs(static_cast<std::size_t>(n));
    for (int mu = 0; mu < n; ++mu)
      for (int rho = 0; rho < n; ++rho)
        derivs[static_cast<std::size_t>(rho)].push_back(cur[static_cast<std::size_t>(mu)].derivative(rho).truncated(maxdeg));
    for (int a = 0; a < n; ++a) {
      LieVector next(static_cast<std::size_t>(n), SparsePoly(n));
      for (int rho = 0; rho < n; ++rho) {
        const SparsePoly& f = phi.at(rho, a).poly();
        if (f.is_zero()) continue;
        for (int mu = 0; mu < n; ++mu) {
          const SparsePoly& d = derivs[static_cast<std::size_t>(rho)][static_cast<std::size_t>(mu)];
          if (d.is_zero()) continue;
          next[static_cast<std::size_t>(mu)] += multiply_truncated(d, f, 0, n, maxdeg);
        }
      }
      Monomial l2 = left;
      l2.bump(a);
      dfs(k + 1, l2, next);
    }
  };
  if (P >= 1)
    for (int a = 0; a < n; ++a) {
      LieVector first;
      for (int mu = 0; mu < n; ++mu) first.push_back(phi.at(mu, a).poly().truncated(P - 1));
      dfs(1, Monomial::var(a), first);
    }
  CoproductTable table;
  for (int mu = 0; mu < n; ++mu) table.emplace_back(n, mu, P, acc[static_cast<std::size_t>(mu)]);
  return table;
}

BigradedCoproduct coproduct_adjoint(const LieAlgebra& L, const SeriesMatrix& phi, int mu, int P) {
  return coproduct_adjoint_table(L, phi, P).at(static_cast<std::size_t>(mu));
}

SparsePoly coproduct_of_monomial(const CoproductTable& table, const Monomial& a, int maxdeg) {
  int n = static_cast<int>(table.size());
  SparsePoly r = SparsePoly::constant(2 * n, 1);
  for (int i = 0; i < n; ++i)
    if (a[i]) {
      if (table[static_cast<std::size_t>(i)].cutoff() < maxdeg)
        throw CutoffError("coproduct table too short for the requested degree");
      r = multiply_truncated(r, power_truncated(table[static_cast<std::size_t>(i)].poly(), a[i], 0, 2 * n, maxdeg), 0,
                             2 * n, maxdeg);
    }
  return r;
}

CheckReport s1p_symmetry_check(const LieAlgebra& L, int p) {
  if (p < 1 || p + 1 > kMaxTreeSize) throw std::out_of_range("s1p check needs 1 <= p <= 8");
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("s(1,p) symmetry p={} ({})", p, L.name());
  std::vector<PlanarTree> blacks(static_cast<std::size_t>(p), PlanarTree::black_leaf());
  PlanarTree s1p = PlanarTree::white_node(blacks);
  std::vector<PlanarTree> trees = enumerate_trees(p, 1);
  Rational sign = p % 2 ? Rational(-1) : Rational(1);
  bool opposite_sign_holds = true;
  for (int mu = 0; mu < n; ++mu) {
    SparsePoly lhs = fev(L, s1p, mu).swapped().poly();
    SparsePoly rhs(2 * n);
    for (const auto& t : trees) rhs += fev(L, t, mu).poly();
    if (!(lhs == rhs * sign))
      r.fail(fmt::format("mu={}: tau(fev(s_1,p)) = {} but (-1)^p * sum = {}", mu + 1, render_tensor(lhs, n),
                         render_tensor(rhs * sign, n)));
    if (!(lhs == rhs * Rational(-sign))) opposite_sign_holds = false;
  }
  r.note(fmt::format("{} ordered (p,1) trees; relation holds with sign (-1)^p{}", trees.size() == 0 ? 0 : [&] {
    std::uint64_t c = 0;
    for (const auto& t : trees) c += numeration_count(t);
    return c;
  }(), opposite_sign_holds ? " and also with (-1)^(p+1) (both sides vanish)" : ""));
  return r;
}

CheckReport vacuum_symmetrization_check(const LieAlgebra& L, int w) {
  if (w < 2) throw std::out_of_range("vacuum symmetrization needs w >= 2");
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("vacuum symmetrization w={} ({})", w, L.name());
  SeriesMatrix phi = phi_symmetric(L, w);
  std::map<std::vector<int>, std::vector<Rational>> vac;
  std::vector<int> alpha(static_cast<std::size_t>(w), 0);
  while (true) {
    auto N = nested_commutator(L, phi, alpha);
    std::vector<Rational> c;
    for (const auto& s : N) c.push_back(s.poly().constant_term());
    vac.emplace(alpha, c);
    int pos = w - 1;
    while (pos >= 0 && alpha[static_cast<std::size_t>(pos)] == n - 1) alpha[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++alpha[static_cast<std::size_t>(pos)];
  }
  for (const auto& [tuple, _] : vac) {
    if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
    std::vector<int> perm(static_cast<std::size_t>(w));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Rational> sum(static_cast<std::size_t>(n), Rational(0));
    do {
      std::vector<int> t2(static_cast<std::size_t>(w));
      for (int i = 0; i < w; ++i) t2[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      const auto& c = vac.at(t2);
      for (int mu = 0; mu < n; ++mu) sum[static_cast<std::size_t>(mu)] += c[static_cast<std::size_t>(mu)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int mu = 0; mu < n; ++mu)
      if (sgn(sum[static_cast<std::size_t>(mu)]) != 0) {
        std::string t;
        for (int a : tuple) t += std::to_string(a + 1);
        r.fail(fmt::format("alpha={} mu={}: symmetrized vacuum value {}", t, mu + 1, to_string(sum[static_cast<std::size_t>(mu)])));
      }
  }
  return r;
}

CheckReport coassociativity_check(const CoproductTable& table, int maxdeg) {
  int n = static_cast<int>(table.size());
  CheckReport r;
  r.name = fmt::format("coassociativity through degree {}", maxdeg);
  for (const auto& t : table)
    if (t.cutoff() < maxdeg) throw CutoffError("coproduct table too short for coassociativity check");
  std::vector<SparsePoly> left_images, right_images;
  for (int i = 0; i < n; ++i) {
    left_images.push_back(table[static_cast<std::size_t>(i)].poly().embedded(3 * n, 0));
    right_images.push_back(table[static_cast<std::size_t>(i)].poly().embedded(3 * n, n));
  }
  std::vector<SparsePoly> delta_first, delta_second;
  for (int i = 0; i < n; ++i) delta_first.push_back(left_images[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) delta_first.push_back(SparsePoly::variable(3 * n, 2 * n + i));
  for (int i = 0; i < n; ++i) delta_second.push_back(SparsePoly::variable(3 * n, i));
  for (int i = 0; i < n; ++i) delta_second.push_back(right_images[static_cast<std::size_t>(i)]);
  for (int mu = 0; mu < n; ++mu) {
    SparsePoly base = table[static_cast<std::size_t>(mu)].poly().truncated(maxdeg);
    SparsePoly a = base.substitute(delta_first, maxdeg);
    SparsePoly b = base.substitute(delta_second, maxdeg);
    if (!(a == b)) r.fail(fmt::format("mu={}: (Delta x id) and (id x Delta) differ", mu + 1));
  }
  return r;
}

CheckReport counit_check(const CoproductTable& table) {
  int n = static_cast<int>(table.size());
  CheckReport r;
  r.name = "counit";
  for (int mu = 0; mu < n; ++mu) {
    const SparsePoly& p = table[static_cast<std::size_t>(mu)].poly();
    SparsePoly left_zero = p.homogeneous_part(0, n, 0);
    SparsePoly right_zero = p.homogeneous_part(n, 2 * n, 0);
    if (!(left_zero == SparsePoly::variable(2 * n, n + mu)))
      r.fail(fmt::format("mu={}: left counit leaves {}", mu + 1, render_tensor(left_zero, n)));
    if (!(right_zero == SparsePoly::variable(2 * n, mu)))
      r.fail(fmt::format("mu={}: right counit leaves {}", mu + 1, render_tensor(right_zero, n)));
  }
  return r;
}

CheckReport selection_rule_check(const LieAlgebra& L, int w, int b) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("selection rule ({},{}) {}", w, b, L.name());
  int excluded = 0;
  for (const auto& t : enumerate_trees(w, b)) {
    if (contributing_filter(t)) continue;
    ++excluded;
    for (int mu = 0; mu < n; ++mu) {
      BigradedCoproduct f = fev(L, t, mu);
      if (!f.is_zero()) r.fail(fmt::format("excluded tree {} has fev^{} = {}", t.canonical(), mu + 1, f.render()));
    }
  }
  r.note(fmt::format("{} excluded planar trees", excluded));
  return r;
}

}  // namespace lieweyl
