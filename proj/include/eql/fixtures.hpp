#ifndef EQL_FIXTURES_HPP
#define EQL_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "eql/dg.hpp"

// Stock dg-algebra fixtures: exterior algebras, the Massey fixture
// Lambda(x,y,z) with dz = xy, and a seeded random family obtained from
// random closed differentials and degree-preserving basis changes.

namespace eql {

namespace detail {

// Exterior algebra on k degree-1 generators: basis indexed by subsets,
// product = wedge with the permutation sign, ordered by subset size then
// lexicographically.
template <class K>
DgAlgebra<K> exterior_skeleton(int k, std::vector<std::vector<int>>* subsets_out) {
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<GradedName> basis;
  for (const auto& s : subsets) {
    std::string nm;
    for (int i : s) nm += std::string(1, static_cast<char>('x' + i));
    if (nm.empty()) nm = "1";
    basis.push_back({nm, static_cast<int>(s.size()), 1, 1});
  }
  DgAlgebra<K> A(basis, Matrix<K>(basis.size(), basis.size()));
  auto index_of = [&subsets](const std::vector<int>& s) {
    return std::find(subsets.begin(), subsets.end(), s) - subsets.begin();
  };
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      // wedge: zero on overlap, else sign of the merge
      std::vector<int> merged = subsets[i];
      bool zero = false;
      int sign = 0;
      for (int g : subsets[j]) {
        if (std::find(merged.begin(), merged.end(), g) != merged.end()) {
          zero = true;
          break;
        }
        auto pos = std::lower_bound(merged.begin(), merged.end(), g);
        sign += merged.end() - pos;
        merged.insert(pos, g);
      }
      if (zero) continue;
      A.set_product(i, j, index_of(merged), sign % 2 == 0 ? K(1) : K(-1));
    }
  A.unit = 0;
  if (subsets_out) *subsets_out = std::move(subsets);
  return A;
}

}  // namespace detail

// Lambda(x_1..x_k), d = 0.
template <class K>
DgAlgebra<K> exterior_algebra(int k) {
  return detail::exterior_skeleton<K>(k, nullptr);
}

// Lambda(x,y,z) with dz = a.xy + b.xz + c.yz (any such d squares to
// zero), extended by the graded Leibniz rule.
template <class K>
DgAlgebra<K> massey_family(const K& a, const K& b, const K& c) {
  std::vector<std::vector<int>> subsets;
  DgAlgebra<K> A0 = detail::exterior_skeleton<K>(3, &subsets);
  auto idx = [&subsets](std::vector<int> s) {
    return std::find(subsets.begin(), subsets.end(), s) - subsets.begin();
  };
  std::size_t n = A0.dim();
  Matrix<K> d(n, n);
  std::size_t iz = idx({2}), ixy = idx({0, 1}), ixz = idx({0, 2}), iyz = idx({1, 2});
  d(ixy, iz) = a;
  d(ixz, iz) = b;
  d(iyz, iz) = c;
  // Leibniz extension to the deg-2 basis: d(xz) = -x dz, d(yz) = -y dz
  std::size_t ixyz = idx({0, 1, 2});
  d(ixyz, ixz) = -c;  // -x.(c yz) = -c xyz
  d(ixyz, iyz) = b;   // -y.(b xz) = +b xyz
  DgAlgebra<K> A(A0.basis(), d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c0 = A0.product_of_basis(i, j)[k];
        if (c0 != K(0)) A.set_product(i, j, k, c0);
      }
  A.unit = A0.unit;
  return A;
}

// The Massey fixture: dz = xy.
template <class K>
DgAlgebra<K> massey_algebra() {
  return massey_family<K>(K(1), K(0), K(0));
}

// Seeded random dg-algebra: a random member of the family above,
// transported along a random degree-preserving change of basis g
// (x .' y = g^{-1}(g(x) g(y)), d' = g^{-1} d g).  All axioms hold by
// construction; the structure constants are generic.
template <class K>
DgAlgebra<K> random_dga(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto small = [&rng]() { return K(static_cast<int>(rng() % 7) - 3); };
  K a = small(), b = small(), c = small();
  if (a == K(0) && b == K(0) && c == K(0)) a = K(1);
  DgAlgebra<K> A0 = massey_family<K>(a, b, c);
  std::size_t n = A0.dim();
  // random degree-preserving invertible g
  Matrix<K> g(n, n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g(i, j) = (A0.basis()[i].degree == A0.basis()[j].degree) ? small() : K(0);
    if (g.inverse()) break;
  }
  Matrix<K> ginv = *g.inverse();
  Matrix<K> d = ginv * A0.d() * g;
  std::vector<GradedName> basis = A0.basis();
  for (std::size_t i = 0; i < n; ++i) basis[i].name = "r" + std::to_string(i);
  DgAlgebra<K> A(basis, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<K> gi(n), gj(n);
      for (std::size_t r = 0; r < n; ++r) {
        gi[r] = g(r, i);
        gj[r] = g(r, j);
      }
      auto pr = ginv.apply(A0.multiply(gi, gj));
      for (std::size_t k = 0; k < n; ++k)
        if (pr[k] != K(0)) A.set_product(i, j, k, pr[k]);
    }
  return A;
}

}  // namespace eql

#endif
