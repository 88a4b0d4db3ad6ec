#include "lieweyl/trees.hpp"

#include <fmt/format.h>

#include <functional>
#include <map>
#include <stdexcept>

namespace lieweyl {

int PlanarTree::whites() const {
  int w = white ? 1 : 0;
  for (const auto& c : children) w += c.whites();
  return w;
}

int PlanarTree::blacks() const {
  int b = white ? 0 : 1;
  for (const auto& c : children) b += c.blacks();
  return b;
}

std::string PlanarTree::canonical() const {
  if (!white) return "b";
  std::string s = "w(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ',';
    s += children[i].canonical();
  }
  return s + ')';
}

namespace {

PlanarTree parse_node(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree string");
  if (s[pos] == 'b') {
    ++pos;
    return PlanarTree::black_leaf();
  }
  if (s[pos] != 'w' || pos + 1 >= s.size() || s[pos + 1] != '(')
    throw std::invalid_argument(fmt::format("expected 'b' or 'w(' at position {}", pos));
  pos += 2;
  PlanarTree t = PlanarTree::white_node();
  if (pos < s.size() && s[pos] == ')') {
    ++pos;
    return t;
  }
  while (true) {
    t.children.push_back(parse_node(s, pos));
    if (pos >= s.size()) throw std::invalid_argument("unterminated white node");
    if (s[pos] == ')') {
      ++pos;
      return t;
    }
    if (s[pos] != ',') throw std::invalid_argument(fmt::format("expected ',' or ')' at position {}", pos));
    ++pos;
  }
}

void check_size(int w, int b) {
  if (w < 0 || b < 0 || w + b < 1 || w + b > kMaxTreeSize)
    throw std::out_of_range(fmt::format("tree bidegree ({},{}) outside 1 <= w+b <= {}", w, b, kMaxTreeSize));
}

using Forest = std::vector<PlanarTree>;

struct TreeGenerator {
  std::map<std::pair<int, int>, std::vector<PlanarTree>> trees;
  std::map<std::pair<int, int>, std::vector<Forest>> forests;

  const std::vector<PlanarTree>& get_trees(int w, int b) {
    auto key = std::make_pair(w, b);
    if (auto it = trees.find(key); it != trees.end()) return it->second;
    std::vector<PlanarTree> out;
    if (w == 0) {
      if (b == 1) out.push_back(PlanarTree::black_leaf());
    } else {
      for (const auto& f : get_forests(w - 1, b)) out.push_back(PlanarTree::white_node(f));
    }
    return trees.emplace(key, std::move(out)).first->second;
  }

  // Ordered sequences of branches with total bidegree (W, B).
  const std::vector<Forest>& get_forests(int W, int B) {
    auto key = std::make_pair(W, B);
    if (auto it = forests.find(key); it != forests.end()) return it->second;
    std::vector<Forest> out;
    if (W == 0 && B == 0) {
      out.emplace_back();
    } else {
      for (int w1 = 0; w1 <= W; ++w1)
        for (int b1 = 0; b1 <= B; ++b1) {
          if (w1 + b1 == 0) continue;
          const auto& heads = get_trees(w1, b1);
          if (heads.empty()) continue;
          const auto& tails = get_forests(W - w1, B - b1);
          for (const auto& h : heads)
            for (const auto& t : tails) {
              Forest f;
              f.reserve(t.size() + 1);
              f.push_back(h);
              f.insert(f.end(), t.begin(), t.end());
              out.push_back(std::move(f));
            }
        }
    }
    return forests.emplace(key, std::move(out)).first->second;
  }
};

// All label lists (preorder of white nodes) drawing from the sorted set `labels`.
std::vector<std::vector<int>> label_subtree(const PlanarTree& t, const std::vector<int>& labels) {
  if (!t.white) return {{}};
  std::vector<int> rest(labels.begin() + 1, labels.end());
  // Distribute `rest` among children: each child takes a subset of its white count.
  std::function<void(std::size_t, const std::vector<int>&, std::vector<int>&)> go;
  std::vector<std::vector<int>> results;
  go = [&](std::size_t child, const std::vector<int>& pool, std::vector<int>& acc) {
    if (child == t.children.size()) {
      std::vector<int> full{labels.front()};
      full.insert(full.end(), acc.begin(), acc.end());
      results.push_back(std::move(full));
      return;
    }
    const PlanarTree& c = t.children[child];
    int need = c.whites();
    if (need == 0) {
      go(child + 1, pool, acc);
      return;
    }
    // Choose `need` elements of pool, in lexicographic order of index sets.
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    int m = static_cast<int>(pool.size());
    while (true) {
      std::vector<int> chosen, remaining;
      std::size_t p = 0;
      for (int i = 0; i < m; ++i) {
        if (p < idx.size() && idx[p] == i) {
          chosen.push_back(pool[static_cast<std::size_t>(i)]);
          ++p;
        } else {
          remaining.push_back(pool[static_cast<std::size_t>(i)]);
        }
      }
      for (const auto& sub : label_subtree(c, chosen)) {
        std::size_t mark = acc.size();
        acc.insert(acc.end(), sub.begin(), sub.end());
        go(child + 1, remaining, acc);
        acc.resize(mark);
      }
      int k = need - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - need + k) --k;
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < need; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  };
  std::vector<int> acc;
  go(0, rest, acc);
  return results;
}

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

PlanarTree PlanarTree::parse(const std::string& text) {
  std::size_t pos = 0;
  PlanarTree t = parse_node(text, pos);
  if (pos != text.size()) throw std::invalid_argument(fmt::format("trailing characters at position {}", pos));
  return t;
}

std::string OrderedTree::canonical() const {
  std::size_t next = 0;
  std::function<std::string(const PlanarTree&)> go = [&](const PlanarTree& t) -> std::string {
    if (!t.white) return "b";
    std::string s = "w" + std::to_string(labels.at(next++)) + "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) s += ',';
      s += go(t.children[i]);
    }
    return s + ')';
  };
  return go(tree);
}

std::vector<PlanarTree> enumerate_trees(int w, int b) {
  check_size(w, b);
  TreeGenerator gen;
  return gen.get_trees(w, b);
}

std::vector<std::vector<int>> numerations(const PlanarTree& t) {
  int w = t.whites();
  if (w == 0) return {{}};
  std::vector<int> labels;
  for (int i = 1; i <= w; ++i) labels.push_back(i);
  return label_subtree(t, labels);
}

std::uint64_t numeration_count(const PlanarTree& t) {
  if (!t.white) return 1;
  int rest = t.whites() - 1;
  std::uint64_t r = 1;
  for (const auto& c : t.children) {
    int wc = c.whites();
    r *= binom_u64(rest, wc) * numeration_count(c);
    rest -= wc;
  }
  return r;
}

std::vector<OrderedTree> enumerate_ordered(int w, int b) {
  std::vector<OrderedTree> out;
  for (auto& t : enumerate_trees(w, b))
    for (auto& l : numerations(t)) out.push_back({t, l});
  return out;
}

std::uint64_t count_ordered(int w, int b) {
  if (w < 0 || b < 0 || w + b < 1) throw std::out_of_range("bidegree must satisfy w+b >= 1");
  thread_local std::map<std::pair<int, int>, std::uint64_t> memo;
  if (w == 0) return b == 1 ? 1 : 0;
  if (auto it = memo.find({w, b}); it != memo.end()) return it->second;
  // Root is white with label 1; its k branches have bidegrees summing to (w-1, b),
  // and the remaining w-1 labels are distributed with a multinomial factor.
  std::function<std::uint64_t(int, int)> branches = [&](int W, int B) -> std::uint64_t {
    if (W == 0 && B == 0) return 1;
    std::uint64_t total = 0;
    for (int w1 = 0; w1 <= W; ++w1)
      for (int b1 = 0; b1 <= B; ++b1) {
        if (w1 + b1 == 0) continue;
        std::uint64_t head = count_ordered(w1, b1);
        if (!head) continue;
        total += binom_u64(W, w1) * head * branches(W - w1, B - b1);
      }
    return total;
  };
  std::uint64_t r = branches(w - 1, b);
  memo.emplace(std::make_pair(w, b), r);
  return r;
}

std::uint64_t double_factorial_count(int w) {
  std::uint64_t r = 1;
  for (int k = 2 * w - 3; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

bool contributing_filter(const PlanarTree& t) {
  if (!t.white) return true;
  if (!t.children.empty() && t.children.front().white && t.children.front().is_leaf()) return false;
  for (const auto& c : t.children)
    if (!contributing_filter(c)) return false;
  return true;
}

namespace {

void draw(const PlanarTree& t, const std::vector<int>* labels, std::size_t& next, const std::string& prefix,
          bool last, bool root, std::string& out) {
  std::string name = t.white ? "w" : "b";
  if (t.white && labels) name += std::to_string(labels->at(next++));
  if (root)
    out += name + "\n";
  else
    out += prefix + (last ? "`-- " : "|-- ") + name + "\n";
  std::string child_prefix = root ? "" : prefix + (last ? "    " : "|   ");
  for (std::size_t i = 0; i < t.children.size(); ++i)
    draw(t.children[i], labels, next, child_prefix, i + 1 == t.children.size(), false, out);
}

}  // namespace

std::string ascii_art(const PlanarTree& t) {
  std::string out;
  std::size_t next = 0;
  draw(t, nullptr, next, "", true, true, out);
  return out;
}

std::string ascii_art(const OrderedTree& t) {
  std::string out;
  std::size_t next = 0;
  draw(t.tree, &t.labels, next, "", true, true, out);
  return out;
}

}  // namespace lieweyl
