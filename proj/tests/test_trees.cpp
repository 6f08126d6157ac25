#include <catch2/catch_amalgamated.hpp>

#include "eql/trees.hpp"

#include <boost/multiprecision/cpp_int.hpp>

using boost::multiprecision::cpp_int;
using eql::BinaryTree;
using eql::enumerate_trees;

namespace {

cpp_int factorial(int n) {
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int leaf_count(const BinaryTree& t) {
  if (t.is_leaf()) return 1;
  return leaf_count(*t.left) + leaf_count(*t.right);
}

}  // namespace

TEST_CASE("tree counts match (2n-2)!/((n-1)! n!) for n = 1..10") {
  for (int n = 1; n <= 10; ++n) {
    auto trees = enumerate_trees(n);
    cpp_int expected = factorial(2 * n - 2) / (factorial(n - 1) * factorial(n));
    REQUIRE(cpp_int(trees.size()) == expected);
  }
}

TEST_CASE("tree counts stay below 4^(n-1)") {
  cpp_int bound = 1;
  for (int n = 1; n <= 10; ++n) {
    cpp_int count = enumerate_trees(n).size();
    REQUIRE(count <= bound);
    if (n >= 2) REQUIRE(count < bound);
    bound *= 4;
  }
}

TEST_CASE("enumerated trees are full binary with the declared leaf count") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      REQUIRE(t.leaves == n);
      REQUIRE(leaf_count(t) == n);
      REQUIRE((t.is_leaf() || (t.left && t.right)));
    }
}

TEST_CASE("rejects non-positive leaf counts") {
  REQUIRE_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_trees(-3), std::invalid_argument);
}
