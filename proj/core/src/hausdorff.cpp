#include "lieweyl/hausdorff.hpp"

#include <fmt/format.h>

#include <functional>
#include <stdexcept>

#include "lieweyl/bernoulli.hpp"
#include "lieweyl/series.hpp"

namespace lieweyl {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

VectorPolynomial add(VectorPolynomial a, const VectorPolynomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

VectorPolynomial scaled(VectorPolynomial a, const Rational& c) {
  for (auto& p : a) p *= c;
  return a;
}

bool is_zero(const VectorPolynomial& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// [v_1, [v_2, ..., [v_m, tail]]]
VectorPolynomial nested(const LieAlgebra& L, const std::vector<const VectorPolynomial*>& vs, VectorPolynomial tail) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    tail = lie_bracket(L, **it, tail);
    if (is_zero(tail)) break;
  }
  return tail;
}

// Bernoulli weight B_{2r}/(2r)!.
Rational even_weight(int twor) { return bernoulli(twor) / factorial(twor); }

}  // namespace

std::string render_kq(const SparsePoly& p, int n) {
  return render(p, [n](int i) { return i < n ? "k" + std::to_string(i + 1) : "q" + std::to_string(i - n + 1); },
                DegreeOrder::Descending);
}

std::string render_kq(const VectorPolynomial& v, int n) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + render_kq(v[i], n);
  return s + ")";
}

VectorPolynomial kq_zero(int n) { return VectorPolynomial(at(n), SparsePoly(2 * n)); }

VectorPolynomial k_vector(int n) {
  VectorPolynomial v;
  for (int i = 0; i < n; ++i) v.push_back(SparsePoly::variable(2 * n, i));
  return v;
}

VectorPolynomial q_vector(int n) {
  VectorPolynomial v;
  for (int i = 0; i < n; ++i) v.push_back(SparsePoly::variable(2 * n, n + i));
  return v;
}

std::vector<VectorPolynomial> dynkin_D(const LieAlgebra& L, int Nmax) {
  int n = L.dim();
  if (Nmax < 1) throw std::invalid_argument("Dynkin recursion needs Nmax >= 1");
  VectorPolynomial k = k_vector(n), q = q_vector(n);
  VectorPolynomial kpq = add(k, q);
  VectorPolynomial kmq = add(k, scaled(q, -1));
  std::vector<VectorPolynomial> D{kpq};
  for (int N = 1; N < Nmax; ++N) {
    VectorPolynomial next = scaled(lie_bracket(L, kmq, D[at(N - 1)]), Rational(1, 2));
    for (int twor = 2; twor <= N; twor += 2) {
      Rational K = even_weight(twor);
      if (sgn(K) == 0) continue;
      // All tuples (s_1..s_2r), s_i >= 1, summing to N.
      std::vector<int> s(at(twor), 1);
      std::function<void(int, int)> go = [&](int pos, int remaining) {
        if (pos == twor - 1) {
          s[at(pos)] = remaining;
          std::vector<const VectorPolynomial*> vs;
          for (int v : s) vs.push_back(&D[at(v - 1)]);
          next = add(next, scaled(nested(L, vs, kpq), K));
          return;
        }
        for (int v = 1; v <= remaining - (twor - 1 - pos); ++v) {
          s[at(pos)] = v;
          go(pos + 1, remaining - v);
        }
      };
      go(0, N);
    }
    D.push_back(scaled(next, Rational(1, N + 1)));
  }
  return D;
}

VectorPolynomial bidegree_part(const VectorPolynomial& v, int n, int w, int b) {
  VectorPolynomial out;
  for (const auto& p : v) out.push_back(p.homogeneous_part(0, n, w).homogeneous_part(n, 2 * n, b));
  return out;
}

BigradedH bigraded_H(const LieAlgebra& L, int Pmax, HRoute route) {
  int n = L.dim();
  VectorPolynomial X = k_vector(n), Y = q_vector(n);
  BigradedH H;
  H[{1, 0}] = X;
  H[{0, 1}] = Y;
  auto get = [&](int w, int b) -> const VectorPolynomial& { return H.at({w, b}); };

  // Sum over ordered tuples of `count` nonzero bidegrees adding to (W, B) of
  // [H_1, [H_2, ..., [H_count, tail]]].
  auto piece_sum = [&](int count, int W, int B, const VectorPolynomial& tail) {
    VectorPolynomial total = kq_zero(n);
    std::vector<const VectorPolynomial*> chosen;
    std::function<void(int, int, int)> go = [&](int left, int w, int b) {
      if (left == 0) {
        if (w == 0 && b == 0) total = add(total, nested(L, chosen, tail));
        return;
      }
      for (int wi = 0; wi <= w; ++wi)
        for (int bi = 0; bi <= b; ++bi) {
          if (wi + bi == 0) continue;
          if (w - wi + b - bi < left - 1) continue;
          const VectorPolynomial& h = get(wi, bi);
          if (is_zero(h)) continue;
          chosen.push_back(&h);
          go(left - 1, w - wi, b - bi);
          chosen.pop_back();
        }
    };
    go(count, W, B);
    return total;
  };

  for (int total = 2; total <= Pmax; ++total)
    for (int W = 0; W <= total; ++W) {
      int B = total - W;
      VectorPolynomial h = kq_zero(n);
      if (route == HRoute::W && W >= 1) {
        h = scaled(lie_bracket(L, X, get(W - 1, B)), Rational(1, 2));
        for (int twor = 2; twor <= W - 1 + B; twor += 2) h = add(h, scaled(piece_sum(twor, W - 1, B, X), even_weight(twor)));
        h = scaled(h, Rational(1, W));
      } else if (route == HRoute::B && B >= 1) {
        h = scaled(lie_bracket(L, Y, get(W, B - 1)), Rational(-1, 2));
        for (int twor = 2; twor <= W + B - 1; twor += 2) h = add(h, scaled(piece_sum(twor, W, B - 1, Y), even_weight(twor)));
        h = scaled(h, Rational(1, B));
      }
      H[{W, B}] = h;
    }
  return H;
}

FreeSeries FreeSeries::letter(int maxlen, int which) {
  FreeSeries s(maxlen);
  if (maxlen >= 1) s.add({static_cast<std::uint8_t>(which)}, 1);
  return s;
}

FreeSeries FreeSeries::one(int maxlen) {
  FreeSeries s(maxlen);
  s.add({}, 1);
  return s;
}

void FreeSeries::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0 || static_cast<int>(w.size()) > maxlen_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeSeries& FreeSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) {
  FreeSeries r(std::min(a.maxlen_, b.maxlen_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > r.maxlen_) continue;
      FreeSeries::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

FreeSeries FreeSeries::exp() const {
  if (terms_.count({})) throw std::invalid_argument("exp needs a series without constant term");
  FreeSeries result = one(maxlen_);
  FreeSeries power = one(maxlen_);
  for (int m = 1; m <= maxlen_; ++m) {
    power = power * *this;
    FreeSeries t = power;
    t *= Rational(1) / factorial(m);
    result += t;
  }
  return result;
}

FreeSeries FreeSeries::log1p() const {
  if (terms_.count({})) throw std::invalid_argument("log1p needs a series without constant term");
  FreeSeries result(maxlen_);
  FreeSeries power = one(maxlen_);
  for (int m = 1; m <= maxlen_; ++m) {
    power = power * *this;
    FreeSeries t = power;
    t *= Rational(m % 2 ? 1 : -1, m);
    result += t;
  }
  return result;
}

std::vector<VectorPolynomial> bch_oracle(const LieAlgebra& L, int P) {
  int n = L.dim();
  if (P < 1) throw std::invalid_argument("oracle needs P >= 1");
  FreeSeries prod = FreeSeries::letter(P, 0).exp() * FreeSeries::letter(P, 1).exp();
  FreeSeries w = prod;
  w.add({}, -1);
  FreeSeries H = w.log1p();
  VectorPolynomial letters[2] = {k_vector(n), q_vector(n)};
  std::vector<VectorPolynomial> D(at(P), kq_zero(n));
  for (const auto& [word, c] : H.terms()) {
    int m = static_cast<int>(word.size());
    VectorPolynomial v = letters[word[0]];
    for (int i = 1; i < m && !is_zero(v); ++i) v = lie_bracket(L, v, letters[word[at(i)]]);
    D[at(m - 1)] = add(D[at(m - 1)], scaled(v, c / m));
  }
  return D;
}

CheckReport linear_parts_check(const LieAlgebra& L, int Nmax) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("linear parts through degree {} ({})", Nmax, L.name());
  VectorPolynomial X = k_vector(n), Y = q_vector(n);
  for (HRoute route : {HRoute::W, HRoute::B}) {
    BigradedH H = bigraded_H(L, Nmax, route);
    const char* rname = route == HRoute::W ? "w-route" : "b-route";
    // H_{1,b} = B_b/b! ad_Y^b X
    VectorPolynomial adY = X;
    for (int b = 0; b + 1 <= Nmax; ++b) {
      VectorPolynomial expect = scaled(adY, bernoulli(b) / factorial(b));
      if (!(H.at({1, b}) == expect))
        r.fail(fmt::format("{}: H(1,{}) = {} expected {}", rname, b, render_kq(H.at({1, b}), n), render_kq(expect, n)));
      adY = lie_bracket(L, Y, adY);
    }
    // H_{w,1} = (-1)^w B_w/w! ad_X^w Y
    VectorPolynomial adX = Y;
    for (int w = 0; w + 1 <= Nmax; ++w) {
      VectorPolynomial expect = scaled(adX, phi_weight(w));
      if (!(H.at({w, 1}) == expect))
        r.fail(fmt::format("{}: H({},1) = {} expected {}", rname, w, render_kq(H.at({w, 1}), n), render_kq(expect, n)));
      adX = lie_bracket(L, X, adX);
    }
  }
  return r;
}

namespace {

std::vector<SparsePoly> kq_images(int n, bool swap, const Rational& sign) {
  std::vector<SparsePoly> img;
  for (int i = 0; i < 2 * n; ++i) {
    int target = swap ? (i < n ? i + n : i - n) : i;
    img.push_back(SparsePoly::variable(2 * n, target, sign));
  }
  return img;
}

}  // namespace

CheckReport hausdorff_symmetry_check(const LieAlgebra& L, int P) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("Hausdorff symmetry through degree {} ({})", P, L.name());
  auto D = dynkin_D(L, P);
  auto images = kq_images(n, true, -1);  // k -> -q, q -> -k
  for (int N = 1; N <= P; ++N)
    for (int mu = 0; mu < n; ++mu) {
      const SparsePoly& p = D[at(N - 1)][at(mu)];
      SparsePoly s = p + p.substitute(images);
      if (!s.is_zero()) r.fail(fmt::format("N={} mu={}: D(k,q) + D(-q,-k) = {}", N, mu + 1, render_kq(s, n)));
    }
  return r;
}

CheckReport hausdorff_diagonal_check(const LieAlgebra& L, int P) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("Hausdorff diagonal through degree {} ({})", P, L.name());
  auto D = dynkin_D(L, P);
  std::vector<SparsePoly> images;
  for (int i = 0; i < 2 * n; ++i) images.push_back(SparsePoly::variable(2 * n, i % n));
  for (int N = 1; N <= P; ++N)
    for (int mu = 0; mu < n; ++mu) {
      SparsePoly s = D[at(N - 1)][at(mu)].substitute(images);
      SparsePoly expect = N == 1 ? SparsePoly::variable(2 * n, mu, 2) : SparsePoly(2 * n);
      if (!(s == expect)) r.fail(fmt::format("N={} mu={}: D(k,k) = {}", N, mu + 1, render_kq(s, n)));
    }
  return r;
}

CheckReport hausdorff_cross_check(const LieAlgebra& L, int P) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("Hausdorff routes through degree {} ({})", P, L.name());
  auto D = dynkin_D(L, P);
  auto O = bch_oracle(L, P);
  for (int N = 1; N <= P; ++N)
    if (!(D[at(N - 1)] == O[at(N - 1)]))
      r.fail(fmt::format("N={}: Dynkin {} vs oracle {}", N, render_kq(D[at(N - 1)], n), render_kq(O[at(N - 1)], n)));
  BigradedH HW = bigraded_H(L, P, HRoute::W);
  BigradedH HB = bigraded_H(L, P, HRoute::B);
  for (int N = 1; N <= P; ++N)
    for (int w = 0; w <= N; ++w) {
      int b = N - w;
      VectorPolynomial split = bidegree_part(D[at(N - 1)], n, w, b);
      if (!(HW.at({w, b}) == split))
        r.fail(fmt::format("H({},{}) w-route {} vs split {}", w, b, render_kq(HW.at({w, b}), n), render_kq(split, n)));
      if (!(HB.at({w, b}) == split))
        r.fail(fmt::format("H({},{}) b-route {} vs split {}", w, b, render_kq(HB.at({w, b}), n), render_kq(split, n)));
    }
  return r;
}

CheckReport compare_coproduct(const LieAlgebra& L, int P) {
  int n = L.dim();
  CheckReport r;
  r.name = fmt::format("coproduct vs Hausdorff through degree {} ({})", P, L.name());
  auto D = dynkin_D(L, P);
  BigradedH HW = bigraded_H(L, P, HRoute::W);
  BigradedH HB = bigraded_H(L, P, HRoute::B);
  CoproductTable trees = coproduct_trees_table(L, P);
  CoproductTable adjoint = coproduct_adjoint_table(L, phi_symmetric(L, P), P);
  for (const auto* table : {&trees, &adjoint}) {
    const char* route = table == &trees ? "trees" : "adjoint";
    for (int mu = 0; mu < n; ++mu) {
      const BigradedCoproduct& c = (*table)[at(mu)];
      for (int N = 1; N <= P; ++N) {
        if (!(c.total_piece(N) == D[at(N - 1)][at(mu)]))
          r.fail(fmt::format("{} mu={} N={}: {} vs D = {}", route, mu + 1, N, render_tensor(c.total_piece(N), n),
                             render_kq(D[at(N - 1)][at(mu)], n)));
        for (int w = 0; w <= N; ++w) {
          int b = N - w;
          SparsePoly piece = c.piece(w, b);
          if (!(piece == HW.at({w, b})[at(mu)]) || !(piece == HB.at({w, b})[at(mu)]))
            r.fail(fmt::format("{} mu={} (w,b)=({},{}): piece differs from H", route, mu + 1, w, b));
        }
      }
      if (c.total_piece(0) != SparsePoly(2 * n)) r.fail(fmt::format("{} mu={}: nonzero constant term", route, mu + 1));
    }
  }
  return r;
}

}  // namespace lieweyl
