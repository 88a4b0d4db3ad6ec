#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lieweyl {

// Planar rooted tree with white and black nodes; black nodes are leaves.
struct PlanarTree {
  bool white = true;
  std::vector<PlanarTree> children;

  static PlanarTree black_leaf() { return PlanarTree{false, {}}; }
  static PlanarTree white_node(std::vector<PlanarTree> kids = {}) { return PlanarTree{true, std::move(kids)}; }

  int whites() const;
  int blacks() const;
  bool is_leaf() const { return children.empty(); }

  // "b" for a black leaf, "w(...)" for a white node, e.g. "w(b,w())".
  std::string canonical() const;
  static PlanarTree parse(const std::string& text);

  bool operator==(const PlanarTree& o) const = default;
};

// A planar tree with a descending numeration of its white nodes: labels[k] is
// the number (1-based) of the k-th white node in preorder.
struct OrderedTree {
  PlanarTree tree;
  std::vector<int> labels;

  std::string canonical() const;
};

inline constexpr int kMaxTreeSize = 9;

std::vector<PlanarTree> enumerate_trees(int w, int b);
std::vector<OrderedTree> enumerate_ordered(int w, int b);
std::vector<std::vector<int>> numerations(const PlanarTree& t);
std::uint64_t numeration_count(const PlanarTree& t);

// Number of ordered trees, by the recursion over the root's child branches
// with multinomial label-distribution factors.
std::uint64_t count_ordered(int w, int b);
// (2w-3)!! with (-1)!! = 1.
std::uint64_t double_factorial_count(int w);

// False when some white node has a white leaf as its leftmost child.
bool contributing_filter(const PlanarTree& t);

std::string ascii_art(const PlanarTree& t);
std::string ascii_art(const OrderedTree& t);

}  // namespace lieweyl
