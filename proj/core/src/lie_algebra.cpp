#include "lieweyl/lie_algebra.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <set>
#include <tuple>

namespace lieweyl {

LieAlgebra LieAlgebra::from_entries(std::string name, int dim, const std::vector<BracketEntry>& entries) {
  if (dim < 1 || dim > kMaxDim) throw AlgebraError(fmt::format("dimension {} outside 1..{}", dim, kMaxDim));
  LieAlgebra L;
  L.name_ = std::move(name);
  L.dim_ = dim;
  L.table_.assign(static_cast<std::size_t>(dim * dim * dim), Rational(0));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw AlgebraError(fmt::format("bracket index ({},{},{}) outside 1..{}", e.i + 1, e.j + 1, e.k + 1, dim));
    if (e.i >= e.j)
      throw AlgebraError(fmt::format("bracket entry ({},{},{}) must have i < j", e.i + 1, e.j + 1, e.k + 1));
    if (!seen.emplace(e.i, e.j, e.k).second)
      throw AlgebraError(fmt::format("duplicate bracket entry ({},{},{})", e.i + 1, e.j + 1, e.k + 1));
    L.table_[L.index(e.i, e.j, e.k)] = e.c;
    L.table_[L.index(e.j, e.i, e.k)] = -e.c;
  }
  auto report = verify_jacobi(dim, L.table_);
  if (!report.pass) {
    const auto& v = report.violations.front();
    throw AlgebraError(
        fmt::format("Jacobi identity fails at (i,j,k,m) = ({},{},{},{})", v[0] + 1, v[1] + 1, v[2] + 1, v[3] + 1));
  }
  L.pairs_.resize(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Rational& c = L.c(i, j, k);
        if (sgn(c) != 0) L.pairs_[static_cast<std::size_t>(i * dim + j)].emplace_back(k, c);
      }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (sgn(L.c(i, j, k)) != 0) L.entries_.push_back({i, j, k, L.c(i, j, k)});
  return L;
}

JacobiReport verify_jacobi(int n, const std::vector<Rational>& t) {
  auto C = [&](int i, int j, int k) -> const Rational& { return t[static_cast<std::size_t>((i * n + j) * n + k)]; };
  JacobiReport r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rational sum = 0;
          for (int s = 0; s < n; ++s) sum += C(i, j, s) * C(s, k, m) + C(j, k, s) * C(s, i, m) + C(k, i, s) * C(s, j, m);
          if (sgn(sum) != 0) {
            r.pass = false;
            r.violations.push_back({i, j, k, m});
          }
        }
  return r;
}

JacobiReport verify_jacobi(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Rational> t(static_cast<std::size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>((i * n + j) * n + k)] = L.c(i, j, k);
  return verify_jacobi(n, t);
}

LieAlgebra abelian_algebra(int n) { return LieAlgebra::from_entries(fmt::format("abelian:{}", n), n, {}); }

LieAlgebra heisenberg_algebra() { return LieAlgebra::from_entries("heisenberg", 3, {{0, 1, 2, Rational(1)}}); }

LieAlgebra su2_algebra() {
  return LieAlgebra::from_entries("su2", 3, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 1, Rational(-1)}});
}

LieAlgebra kappa_algebra(const std::vector<Rational>& a) {
  int n = static_cast<int>(a.size());
  std::vector<BracketEntry> entries;
  // [x_i, x_j] = a_i x_j - a_j x_i
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (sgn(a[static_cast<std::size_t>(i)]) != 0) entries.push_back({i, j, j, a[static_cast<std::size_t>(i)]});
      if (sgn(a[static_cast<std::size_t>(j)]) != 0) entries.push_back({i, j, i, -a[static_cast<std::size_t>(j)]});
    }
  std::string name = "kappa:";
  for (int i = 0; i < n; ++i) name += (i ? "," : "") + to_string(a[static_cast<std::size_t>(i)]);
  return LieAlgebra::from_entries(name, n, entries);
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_dim(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw AlgebraError("malformed dimension '" + s + "'");
  }
}

}  // namespace

LieAlgebra builtin_algebra(std::string_view family, const std::vector<std::string>& params) {
  if (family == "su2") {
    if (!params.empty()) throw AlgebraError("su2 takes no parameters");
    return su2_algebra();
  }
  if (family == "heisenberg") {
    if (!params.empty()) throw AlgebraError("heisenberg takes no parameters");
    return heisenberg_algebra();
  }
  if (family == "abelian") {
    if (params.size() != 1) throw AlgebraError("abelian needs exactly one parameter, the dimension");
    return abelian_algebra(parse_dim(params[0]));
  }
  if (family == "kappa") {
    if (params.empty()) throw AlgebraError("kappa needs the a-vector, e.g. kappa:1,0,0");
    std::vector<Rational> a;
    for (const auto& p : params) {
      try {
        a.push_back(parse_rational(p));
      } catch (const std::invalid_argument& e) {
        throw AlgebraError(e.what());
      }
    }
    return kappa_algebra(a);
  }
  throw AlgebraError("unknown algebra family '" + std::string(family) + "'");
}

LieAlgebra builtin_algebra(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view family = spec.substr(0, colon);
  std::vector<std::string> params;
  if (colon != std::string_view::npos) params = split(spec.substr(colon + 1), ',');
  return builtin_algebra(family, params);
}

std::vector<LieAlgebra> builtin_algebras() {
  return {abelian_algebra(3), heisenberg_algebra(), su2_algebra(), kappa_algebra({1, 0, 0})};
}

LieAlgebra resolve_algebra(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return load_algebra_file(source);
  return builtin_algebra(source);
}

LieVector lie_bracket(const LieAlgebra& L, const LieVector& u, const LieVector& v, int lo, int hi, int maxdeg) {
  int n = L.dim();
  int nv = u.front().nvars();
  if (hi <= lo) hi = nv;
  LieVector r(static_cast<std::size_t>(n), SparsePoly(nv));
  for (int a = 0; a < n; ++a) {
    const auto& ua = u[static_cast<std::size_t>(a)];
    if (ua.is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      const auto& list = L.bracket(a, b);
      if (list.empty()) continue;
      const auto& vb = v[static_cast<std::size_t>(b)];
      if (vb.is_zero()) continue;
      SparsePoly prod = multiply_truncated(ua, vb, lo, hi, maxdeg);
      if (prod.is_zero()) continue;
      for (const auto& [k, c] : list) r[static_cast<std::size_t>(k)] += prod * c;
    }
  }
  return r;
}

}  // namespace lieweyl
