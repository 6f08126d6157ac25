#ifndef EQL_TREES_HPP
#define EQL_TREES_HPP

#include <memory>
#include <stdexcept>
#include <vector>

namespace eql {

// Planar full binary rooted tree with ordered leaves.  Leaves are
// implicit; an internal node splits the leaf interval between its two
// children.
struct BinaryTree {
  int leaves = 1;
  std::shared_ptr<const BinaryTree> left, right;  // null for a single leaf

  bool is_leaf() const { return !left; }
};

// All trees with n leaves, ordered by the size of the left subtree and
// then recursively.  |result| is the Catalan number C_{n-1}.
inline std::vector<BinaryTree> enumerate_trees(int n) {
  if (n <= 0) throw std::invalid_argument("tree leaf count must be positive");
  if (n == 1) return {BinaryTree{}};
  std::vector<BinaryTree> out;
  for (int s = 1; s <= n - 1; ++s) {
    auto ls = enumerate_trees(s);
    auto rs = enumerate_trees(n - s);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        BinaryTree t;
        t.leaves = n;
        t.left = std::make_shared<const BinaryTree>(l);
        t.right = std::make_shared<const BinaryTree>(r);
        out.push_back(std::move(t));
      }
  }
  return out;
}

}  // namespace eql

#endif
