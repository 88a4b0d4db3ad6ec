#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/feynman.hpp"
#include "lieweyl/hausdorff.hpp"
#include "lieweyl/trees.hpp"

using namespace lieweyl;

namespace {

// All planar rooted trees on N nodes, read off Dyck words; all nodes white.
std::vector<PlanarTree> dyck_trees(int N) {
  std::vector<PlanarTree> out;
  int len = 2 * (N - 1);
  std::function<void(std::string&, int, int)> rec = [&](std::string& w, int open, int depth) {
    if (static_cast<int>(w.size()) == len) {
      std::vector<PlanarTree*> stack;
      PlanarTree root = PlanarTree::white_node();
      stack.push_back(&root);
      for (char c : w) {
        if (c == '(') {
          stack.back()->children.push_back(PlanarTree::white_node());
          stack.push_back(&stack.back()->children.back());
        } else {
          stack.pop_back();
        }
      }
      out.push_back(root);
      return;
    }
    if (open < N - 1) {
      w.push_back('(');
      rec(w, open + 1, depth + 1);
      w.pop_back();
    }
    if (depth > 0) {
      w.push_back(')');
      rec(w, open, depth - 1);
      w.pop_back();
    }
  };
  std::string w;
  rec(w, 0, 0);
  return out;
}

// Colors exactly b non-root leaves black, every way.
void colorings(const PlanarTree& t, int b, std::set<std::string>& out) {
  std::vector<PlanarTree*> leaves;
  PlanarTree copy = t;
  std::function<void(PlanarTree&, bool)> collect = [&](PlanarTree& n, bool root) {
    if (n.children.empty() && !root) leaves.push_back(&n);
    for (auto& c : n.children) collect(c, false);
  };
  collect(copy, true);
  int L = static_cast<int>(leaves.size());
  for (int mask = 0; mask < (1 << L); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != b) continue;
    for (int i = 0; i < L; ++i) leaves[static_cast<std::size_t>(i)]->white = !(mask >> i & 1);
    out.insert(copy.canonical());
  }
}

// Increasing labelings of the white nodes, by brute force over permutations.
std::uint64_t brute_numerations(const PlanarTree& t) {
  std::vector<int> parent;
  std::function<void(const PlanarTree&, int)> walk = [&](const PlanarTree& n, int p) {
    if (!n.white) return;
    int me = static_cast<int>(parent.size());
    parent.push_back(p);
    for (const auto& c : n.children) walk(c, me);
  };
  walk(t, -1);
  std::vector<int> lab(parent.size());
  std::iota(lab.begin(), lab.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < parent.size() && ok; ++i)
      if (parent[i] >= 0 && lab[static_cast<std::size_t>(parent[i])] > lab[i]) ok = false;
    count += ok;
  } while (std::next_permutation(lab.begin(), lab.end()));
  return count;
}

}  // namespace

TEST(Trees, CanonicalRoundTrip) {
  for (int w = 0; w <= 4; ++w)
    for (int b = 0; b <= 3; ++b)
      if (w + b >= 1)
        for (const auto& t : enumerate_trees(w, b)) {
          EXPECT_EQ(PlanarTree::parse(t.canonical()), t);
          EXPECT_EQ(t.whites(), w);
          EXPECT_EQ(t.blacks(), b);
        }
  EXPECT_THROW(PlanarTree::parse("w(b"), std::invalid_argument);
}

TEST(Trees, PlanarEnumerationMatchesDyckOracle) {
  for (int N = 1; N <= 7; ++N)
    for (int b = 0; b <= N; ++b) {
      int w = N - b;
      std::set<std::string> oracle;
      if (N == 1 && b == 1) {
        oracle.insert(PlanarTree::black_leaf().canonical());
      } else {
        for (const auto& t : dyck_trees(N)) colorings(t, b, oracle);
      }
      std::set<std::string> got;
      for (const auto& t : enumerate_trees(w, b)) got.insert(t.canonical());
      EXPECT_EQ(got, oracle) << "w=" << w << " b=" << b;
      EXPECT_EQ(enumerate_trees(w, b).size(), got.size()) << "duplicates at w=" << w << " b=" << b;
    }
}

TEST(Trees, NumerationsMatchBruteForce) {
  for (int w = 1; w <= 6; ++w)
    for (int b = 0; w + b <= 7; ++b) {
      std::uint64_t total = 0;
      for (const auto& t : enumerate_trees(w, b)) {
        EXPECT_EQ(numeration_count(t), brute_numerations(t)) << t.canonical();
        EXPECT_EQ(numerations(t).size(), numeration_count(t));
        total += numeration_count(t);
      }
      EXPECT_EQ(total, count_ordered(w, b)) << "w=" << w << " b=" << b;
      if (w + b <= 6) EXPECT_EQ(enumerate_ordered(w, b).size(), count_ordered(w, b));
    }
}

TEST(Trees, WhiteCountsAreDoubleFactorials) {
  const std::uint64_t s[] = {1, 1, 3, 15, 105, 945, 10395};
  for (int w = 1; w <= 7; ++w) {
    EXPECT_EQ(count_ordered(w, 0), s[w - 1]);
    EXPECT_EQ(double_factorial_count(w), s[w - 1]);
  }
  EXPECT_TRUE(tree_census(5).pass);
}

TEST(Trees, ContributingCensus) {
  std::vector<std::string> got;
  for (const auto& t : enumerate_trees(4, 1))
    if (contributing_filter(t)) got.push_back(t.canonical());
  EXPECT_EQ(got.size(), 8u);
  EXPECT_TRUE(std::find(got.begin(), got.end(), "w(w(w(w(b))))") != got.end());
  EXPECT_FALSE(contributing_filter(PlanarTree::parse("w(w(),b)")));
}

TEST(Trees, AsciiArt) {
  EXPECT_EQ(ascii_art(PlanarTree::parse("w(b,w(b))")), "w\n|-- b\n`-- w\n    `-- b\n");
}

TEST(Feynman, SingleDiagram) {
  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0})}) EXPECT_TRUE(feyrule_diagram(L).pass);
}

TEST(Feynman, PlanarEvaluationSumsOrderedOnes) {
  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0})})
    for (int w = 1; w <= 3; ++w)
      for (int b = 1; b <= 2; ++b)
        for (const auto& t : enumerate_trees(w, b))
          for (int mu = 0; mu < L.dim(); ++mu) {
            BigradedCoproduct sum(L.dim(), mu, w + b);
            for (const auto& labels : numerations(t)) sum += fev(L, OrderedTree{t, labels}, mu);
            EXPECT_EQ(sum, fev(L, t, mu)) << t.canonical();
          }
}

TEST(Feynman, NestedCommutatorExpansion) {
  const int counts[] = {1, 1, 2, 6, 24};
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(nested_commutator_expansion(k).size(), static_cast<std::size_t>(counts[k - 1]));
  LieAlgebra L = su2_algebra();
  SeriesMatrix phi = phi_symmetric(L, 5);
  for (int k = 1; k <= 4; ++k) {
    auto terms = nested_commutator_expansion(k);
    std::vector<int> alpha(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(i)] = (i * 2 + 1) % 3;
    auto direct = nested_commutator(L, phi, alpha);
    for (int mu = 0; mu < 3; ++mu)
      EXPECT_EQ(evaluate_expansion(L, phi, terms, alpha, mu).poly(), direct[static_cast<std::size_t>(mu)].poly())
          << "k=" << k << " mu=" << mu;
  }
}

TEST(Coproduct, AbelianIsPrimitive) {
  LieAlgebra L = abelian_algebra(3);
  auto table = coproduct_trees_table(L, 5);
  for (int mu = 0; mu < 3; ++mu) {
    SparsePoly expect(6);
    expect.add_term(Monomial::var(mu), 1);
    expect.add_term(Monomial::var(3 + mu), 1);
    EXPECT_EQ(table[static_cast<std::size_t>(mu)].poly(), expect);
  }
}

TEST(Coproduct, RoutesAgreeAndMatchDisplay) {
  for (const auto& L : builtin_algebras())
    for (int P = 1; P <= 5; ++P) {
      auto trees = coproduct_trees_table(L, P);
      auto adjoint = coproduct_adjoint_table(L, phi_symmetric(L, P), P);
      for (int mu = 0; mu < L.dim(); ++mu)
        EXPECT_EQ(trees[static_cast<std::size_t>(mu)], adjoint[static_cast<std::size_t>(mu)]) << L.name() << P;
    }
  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0}), heisenberg_algebra()}) {
    auto trees = coproduct_trees_table(L, 4);
    auto formula = explicit_coproduct_formula(L);
    for (int mu = 0; mu < L.dim(); ++mu)
      EXPECT_EQ(trees[static_cast<std::size_t>(mu)], formula[static_cast<std::size_t>(mu)]) << L.name();
  }
}

TEST(Coproduct, Su2FirstComponentDegreeTwo) {
  EXPECT_EQ(coproduct_trees(su2_algebra(), 0, 2).render(), "1⊗d1 + d1⊗1 + 1/2*d2⊗d3 - 1/2*d3⊗d2");
}

TEST(Coproduct, CounitAndCoassociativity) {
  for (const auto& L : builtin_algebras()) {
    auto table = coproduct_trees_table(L, 4);
    EXPECT_TRUE(counit_check(table).pass) << L.name();
    EXPECT_TRUE(coassociativity_check(table, 4).pass) << L.name();
  }
}

TEST(Coproduct, PerturbedTableIsNotCoassociative) {
  LieAlgebra L = su2_algebra();
  auto table = coproduct_trees_table(L, 3);
  SparsePoly p = table[0].poly();
  p.add_term(Monomial::var(1) * Monomial::var(3 + 1) * Monomial::var(3 + 1), Rational(1, 7));
  table[0] = BigradedCoproduct(3, 0, 3, p);
  EXPECT_FALSE(coassociativity_check(table, 3).pass);
}

TEST(Coproduct, TreeSymmetryAndSelectionRule) {
  for (const auto& L : {su2_algebra(), kappa_algebra({1, 0, 0})}) {
    for (int p = 1; p <= 4; ++p) EXPECT_TRUE(s1p_symmetry_check(L, p).pass) << L.name() << p;
    for (int w = 2; w <= 4; ++w) EXPECT_TRUE(vacuum_symmetrization_check(L, w).pass) << L.name() << w;
    for (int w = 0; w <= 3; ++w)
      for (int b = 0; b <= 2; ++b)
        if (w + b >= 1) EXPECT_TRUE(selection_rule_check(L, w, b).pass) << L.name() << w << b;
  }
}

TEST(Coproduct, MatchesHausdorff) {
  for (const auto& L : builtin_algebras()) EXPECT_TRUE(compare_coproduct(L, 4).pass) << L.name();
}
