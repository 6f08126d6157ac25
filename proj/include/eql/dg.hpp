#ifndef EQL_DG_HPP
#define EQL_DG_HPP

#include <string>
#include <vector>

#include "eql/matrix.hpp"

namespace eql {

struct CheckReport {
  bool pass = true;
  std::string detail;  // first counterexample when pass is false
};

// Basis element of a graded algebra carrying an integer degree and, for
// the multi-vertex (Ext-quiver) case, a (source, target) vertex pair.
// Single-vertex fixtures use src = tgt = 1 throughout.
struct GradedName {
  std::string name;
  int degree = 0;
  int src = 1;
  int tgt = 1;
};

// Finite-dimensional dg-algebra: graded basis, differential of degree +1
// and an associative degree-0 product given by structure constants.
// The product composes left to right: an (a,b) element times a (b,c)
// element lands in (a,c), matching path-word composition.
template <class K>
class DgAlgebra {
 public:
  DgAlgebra() = default;
  DgAlgebra(std::vector<GradedName> basis, Matrix<K> d)
      : basis_(std::move(basis)), d_(std::move(d)) {
    std::size_t n = basis_.size();
    prod_.assign(n * n, std::vector<K>(n, K(0)));
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<GradedName>& basis() const { return basis_; }
  const Matrix<K>& d() const { return d_; }
  int degree(std::size_t i) const { return basis_[i].degree; }

  void set_product(std::size_t i, std::size_t j, std::size_t k, const K& c) {
    prod_[i * dim() + j][k] = c;
  }
  const std::vector<K>& product_of_basis(std::size_t i, std::size_t j) const {
    return prod_[i * dim() + j];
  }

  std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y) const {
    std::vector<K> r(dim(), K(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == K(0)) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == K(0)) continue;
        const auto& pij = prod_[i * dim() + j];
        K c = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (pij[k] != K(0)) r[k] += c * pij[k];
      }
    }
    return r;
  }

  std::optional<std::size_t> unit;  // basis index of 1, if declared

 private:
  std::vector<GradedName> basis_;
  Matrix<K> d_;
  std::vector<std::vector<K>> prod_;  // (i*dim+j) -> coefficients of b_i . b_j
};

namespace detail {
template <class K>
bool vec_eq(const std::vector<K>& a, const std::vector<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}
}  // namespace detail

// d^2 = 0, graded Leibniz, associativity, and degree/block consistency
// of d and the product, all on basis tuples.
template <class K>
CheckReport check_dga(const DgAlgebra<K>& A) {
  std::size_t n = A.dim();
  const auto& B = A.basis();
  // degree and block homogeneity of d
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (A.d()(i, j) != K(0)) {
        if (B[i].degree != B[j].degree + 1)
          return {false, "d is not of degree +1 on " + B[j].name};
        if (B[i].src != B[j].src || B[i].tgt != B[j].tgt)
          return {false, "d does not preserve vertex blocks on " + B[j].name};
      }
  if (!(A.d() * A.d()).is_zero()) return {false, "d^2 != 0"};
  // product degree/block consistency
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = A.product_of_basis(i, j);
      bool composable = B[i].tgt == B[j].src;
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k] == K(0)) continue;
        if (!composable)
          return {false, "non-composable product " + B[i].name + "." + B[j].name};
        if (B[k].degree != B[i].degree + B[j].degree)
          return {false, "product not degree 0 on " + B[i].name + "." + B[j].name};
        if (B[k].src != B[i].src || B[k].tgt != B[j].tgt)
          return {false, "product breaks blocks on " + B[i].name + "." + B[j].name};
      }
    }
  // Leibniz: d(xy) = d(x)y + (-1)^{|x|} x d(y)
  auto unit_vec = [n](std::size_t i) {
    std::vector<K> v(n, K(0));
    v[i] = K(1);
    return v;
  };
  auto apply_d = [&A](const std::vector<K>& v) { return A.d().apply(v); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = apply_d(A.multiply(unit_vec(i), unit_vec(j)));
      auto rhs = A.multiply(apply_d(unit_vec(i)), unit_vec(j));
      auto t = A.multiply(unit_vec(i), apply_d(unit_vec(j)));
      K sgn = (B[i].degree % 2 == 0) ? K(1) : K(-1);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += sgn * t[k];
      if (!detail::vec_eq(lhs, rhs))
        return {false, "Leibniz fails on (" + B[i].name + ", " + B[j].name + ")"};
    }
  // associativity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = A.multiply(A.multiply(unit_vec(i), unit_vec(j)), unit_vec(k));
        auto rhs = A.multiply(unit_vec(i), A.multiply(unit_vec(j), unit_vec(k)));
        if (!detail::vec_eq(lhs, rhs))
          return {false, "associativity fails on (" + B[i].name + ", " + B[j].name + ", " +
                             B[k].name + ")"};
      }
  return {true, ""};
}

// Splitting data (i, p, h) for a dg-algebra: p i = id on H and
// i p = id_A + d h + h d, with the side conditions h h = 0, h i = 0,
// p h = 0 enforced by construction.
template <class K>
struct HodgeData {
  const DgAlgebra<K>* algebra = nullptr;
  std::vector<GradedName> h_basis;  // chosen cohomology basis, with degrees/blocks
  Matrix<K> incl;                   // i : H -> A   (dim A x dim H)
  Matrix<K> proj;                   // p : A -> H   (dim H x dim A)
  Matrix<K> htpy;                   // h : A -> A, degree -1
  bool side_conditions = true;
};

// H = ker d / im d realized as a complement of im d inside ker d, with
// deterministic pivoting.  The homotopy inverts d from a chosen
// complement of ker d onto im d.
template <class K>
HodgeData<K> compute_hodge(const DgAlgebra<K>& A) {
  std::size_t n = A.dim();
  const Matrix<K>& d = A.d();
  auto ker = d.kernel_basis();

  // complement C of ker d in A, from standard basis vectors
  Matrix<K> span = Matrix<K>::from_columns(n, ker);
  std::vector<std::vector<K>> cbasis;
  {
    std::vector<std::vector<K>> cols = ker;
    std::size_t r = span.rank();
    for (std::size_t j = 0; j < n && r < n; ++j) {
      std::vector<K> ej(n, K(0));
      ej[j] = K(1);
      auto trial = cols;
      trial.push_back(ej);
      Matrix<K> m = Matrix<K>::from_columns(n, trial);
      if (m.rank() > r) {
        cols = std::move(trial);
        cbasis.push_back(std::move(ej));
        ++r;
      }
    }
  }
  // im d basis: d applied to the C basis (d restricted to C is injective)
  std::vector<std::vector<K>> imd;
  for (const auto& c : cbasis) imd.push_back(d.apply(c));

  // harmonic representatives: extend im d to ker d using ker basis vectors
  std::vector<std::vector<K>> harm;
  {
    std::vector<std::vector<K>> cols = imd;
    std::size_t r = Matrix<K>::from_columns(n, cols).rank();
    for (const auto& kv : ker) {
      if (r == ker.size()) break;
      auto trial = cols;
      trial.push_back(kv);
      if (Matrix<K>::from_columns(n, trial).rank() > r) {
        cols = std::move(trial);
        harm.push_back(kv);
        ++r;
      }
    }
  }

  // full change of basis M = [imd | harm | C]
  std::vector<std::vector<K>> all = imd;
  all.insert(all.end(), harm.begin(), harm.end());
  all.insert(all.end(), cbasis.begin(), cbasis.end());
  Matrix<K> M = Matrix<K>::from_columns(n, all);
  Matrix<K> Minv = *M.inverse();

  std::size_t hdim = harm.size(), cdim = cbasis.size();
  HodgeData<K> out;
  out.algebra = &A;
  out.incl = Matrix<K>::from_columns(n, harm);
  out.proj = Matrix<K>(hdim, n);
  for (std::size_t r = 0; r < hdim; ++r)
    for (std::size_t c = 0; c < n; ++c) out.proj(r, c) = Minv(cdim + r, c);
  // h(d c_j) = -c_j; h vanishes on harmonics and on C
  out.htpy = Matrix<K>(n, n);
  for (std::size_t j = 0; j < cdim; ++j) {
    // row j of Minv extracts the imd-coordinate along d(c_j)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        out.htpy(r, c) -= cbasis[j][r] * Minv(j, c);
  }
  // degrees and blocks of the chosen representatives
  for (const auto& v : harm) {
    GradedName g;
    for (std::size_t r = 0; r < n; ++r)
      if (v[r] != K(0)) {
        g = A.basis()[r];
        break;
      }
    g.name = "[" + g.name + "]";
    out.h_basis.push_back(g);
  }
  return out;
}

}  // namespace eql

#endif
