#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieweyl/rational.hpp"
#include "lieweyl/report.hpp"
#include "lieweyl/sparse_poly.hpp"

namespace lieweyl {

inline constexpr int kMaxDim = 8;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One stored structure constant [x_i, x_j] contains c * x_k, with i < j.
// Indices are 0-based here; files and the command line use 1-based indices.
struct BracketEntry {
  int i = 0, j = 0, k = 0;
  Rational c;
};

class LieAlgebra {
 public:
  // Validates ranges, ordering, duplicates and the Jacobi identity.
  static LieAlgebra from_entries(std::string name, int dim, const std::vector<BracketEntry>& entries);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const { return entries_.empty(); }

  // C^k_{ij}, antisymmetric in (i, j).
  const Rational& c(int i, int j, int k) const { return table_[index(i, j, k)]; }

  // Nonzero (k, C^k_{ij}) for the ordered pair (i, j).
  const std::vector<std::pair<int, Rational>>& bracket(int i, int j) const {
    return pairs_[static_cast<std::size_t>(i * dim_ + j)];
  }

  const std::vector<BracketEntry>& entries() const { return entries_; }

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && table_ == o.table_; }

 private:
  std::size_t index(int i, int j, int k) const { return static_cast<std::size_t>((i * dim_ + j) * dim_ + k); }

  std::string name_;
  int dim_ = 0;
  std::vector<Rational> table_;
  std::vector<std::vector<std::pair<int, Rational>>> pairs_;
  std::vector<BracketEntry> entries_;
};

// Jacobi sum over all (i, j, k, m); violations listed 0-based.
struct JacobiReport {
  bool pass = true;
  std::vector<std::array<int, 4>> violations;
};
JacobiReport verify_jacobi(int dim, const std::vector<Rational>& table);
JacobiReport verify_jacobi(const LieAlgebra& L);

LieAlgebra abelian_algebra(int n);
LieAlgebra heisenberg_algebra();
LieAlgebra su2_algebra();
// C^k_{ij} = a_i delta^k_j - a_j delta^k_i, with n = a.size().
LieAlgebra kappa_algebra(const std::vector<Rational>& a);

// "su2", "heisenberg", "abelian:4", "kappa:1,0,0".
LieAlgebra builtin_algebra(std::string_view spec);
LieAlgebra builtin_algebra(std::string_view family, const std::vector<std::string>& params);

// The fixed set used by the verification suites.
std::vector<LieAlgebra> builtin_algebras();

// JSON document: {"name": ..., "dim": ..., "bracket": [{"i":1,"j":2,"k":3,"c":"1"}, ...]}.
LieAlgebra load_algebra(std::string_view text);
LieAlgebra load_algebra_file(const std::string& path);
std::string serialize_algebra(const LieAlgebra& L);

// Either an existing file or a builtin spec.
LieAlgebra resolve_algebra(const std::string& source);

// Vectors in g with polynomial coefficients; [u, v]^k = C^k_{ab} u^a v^b.
using LieVector = std::vector<SparsePoly>;
LieVector lie_bracket(const LieAlgebra& L, const LieVector& u, const LieVector& v, int lo = 0, int hi = 0,
                      int maxdeg = -1);

}  // namespace lieweyl
