#ifndef EQL_AINFINITY_HPP
#define EQL_AINFINITY_HPP

#include <map>
#include <string>
#include <vector>

#include "eql/dg.hpp"
#include "eql/trees.hpp"

// Minimal A-infinity structures by homotopy transfer over a splitting
// (i, p, h), via the sum over planar binary rooted trees: i on leaves,
// the product on internal vertices, h on internal edges, p (resp. h for
// the morphism components) on the root.
//
// Sign rule, fixed once: structure maps are stored in the bar (shifted)
// convention, where the only sign is the Koszul sign of the shifted
// product.  At every internal vertex combining a left subtree with
// inputs x_j and a right subtree, the product picks up
// (-1)^{sum_j (|x_j| - 1)}.  The Stasheff checker below is the arbiter
// for this convention.  The accessor m_column converts a stored column
// to the unshifted product m_n; on tuples of degree-1 inputs the two
// conventions coincide.

namespace eql {

// Sparse n-linear map H^{otimes n} -> W keyed by basis tuples.
template <class K>
struct MultilinearMap {
  int arity = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::map<std::vector<int>, std::vector<K>> cols;  // nonzero columns only

  const std::vector<K>* column(const std::vector<int>& tuple) const {
    auto it = cols.find(tuple);
    return it == cols.end() ? nullptr : &it->second;
  }
  void add(const std::vector<int>& tuple, const std::vector<K>& v, const K& scale = K(1)) {
    bool nz = false;
    for (const auto& x : v)
      if (x != K(0)) {
        nz = true;
        break;
      }
    if (!nz || scale == K(0)) return;
    auto& c = cols[tuple];
    if (c.empty()) c.assign(target_dim, K(0));
    for (std::size_t i = 0; i < target_dim; ++i) c[i] += scale * v[i];
    for (const auto& x : c)
      if (x != K(0)) return;
    cols.erase(tuple);
  }
  bool is_zero() const { return cols.empty(); }
};

// Minimal A-infinity structure on a graded space: products stored in
// bar convention for arities 2..N.
template <class K>
struct AInfinityStructure {
  std::vector<GradedName> h_basis;
  int max_arity = 0;
  std::map<int, MultilinearMap<K>> bar_products;  // arity -> b_n

  std::size_t dim() const { return h_basis.size(); }
  int bar_degree(int idx) const { return h_basis[idx].degree - 1; }

  const MultilinearMap<K>& bar(int n) const { return bar_products.at(n); }

  // Unshifted product m_n on a basis tuple: m_n = sign . b_n with the
  // standard shift sign (-1)^{sum_j (n-j) (|x_j|-1)}.
  std::vector<K> m_column(int n, const std::vector<int>& tuple) const {
    const auto* c = bar(n).column(tuple);
    std::vector<K> out(dim(), K(0));
    if (!c) return out;
    int s = 0;
    for (int j = 0; j < n; ++j) s += (n - 1 - j) * bar_degree(tuple[j]);
    K sgn = (s % 2 == 0) ? K(1) : K(-1);
    for (std::size_t i = 0; i < dim(); ++i) out[i] = sgn * (*c)[i];
    return out;
  }
};

// A-infinity morphism components I_n : H^{otimes n} -> A, bar
// convention, I_1 = i.
template <class K>
struct TransferData {
  std::vector<GradedName> h_basis;
  int max_arity = 0;
  std::map<int, MultilinearMap<K>> components;  // arity -> I_n

  const MultilinearMap<K>& I(int n) const { return components.at(n); }
};

namespace detail {

// Shifted product of two homogeneous A-vectors whose bar degrees sum as
// recorded: b2(x, y) = (-1)^{||x||} x . y.
template <class K>
std::vector<K> shifted_product(const DgAlgebra<K>& A, const std::vector<K>& x, int x_bar_deg,
                               const std::vector<K>& y) {
  auto r = A.multiply(x, y);
  if (((x_bar_deg % 2) + 2) % 2 == 1)
    for (auto& c : r) c = -c;
  return r;
}

template <class K>
struct TreeEval {
  const DgAlgebra<K>& A;
  const HodgeData<K>& hodge;
  std::vector<int> leaf_bar_deg;                       // bar degree per H basis index
  std::map<std::string, MultilinearMap<K>> cache;      // h-decorated subtree maps
  bool h_is_zero;

  explicit TreeEval(const HodgeData<K>& hd) : A(*hd.algebra), hodge(hd) {
    for (const auto& g : hd.h_basis) leaf_bar_deg.push_back(g.degree - 1);
    h_is_zero = hd.htpy.is_zero();
  }

  static std::string encode(const BinaryTree& t) {
    if (t.is_leaf()) return "*";
    return "(" + encode(*t.left) + encode(*t.right) + ")";
  }

  int tuple_bar_deg(const std::vector<int>& tuple) const {
    int s = 0;
    for (int i : tuple) s += leaf_bar_deg[i];
    return s;
  }

  // Raw tree value: product over the tree with h on internal edges and
  // nothing applied at the root.  H^{otimes n} -> A.
  MultilinearMap<K> raw(const BinaryTree& t) {
    MultilinearMap<K> out;
    out.arity = t.leaves;
    out.source_dim = hodge.h_basis.size();
    out.target_dim = A.dim();
    if (t.is_leaf()) return out;  // not used; leaves handled by decorated()
    auto l = decorated(*t.left);
    auto r = decorated(*t.right);
    for (const auto& [lt, lv] : l.cols)
      for (const auto& [rt, rv] : r.cols) {
        auto tuple = lt;
        tuple.insert(tuple.end(), rt.begin(), rt.end());
        out.add(tuple, shifted_product(A, lv, tuple_bar_deg(lt), rv));
      }
    return out;
  }

  // Decorated value: i on a leaf, h(raw) on an internal subtree.
  const MultilinearMap<K>& decorated(const BinaryTree& t) {
    std::string key = encode(t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MultilinearMap<K> out;
    out.arity = t.leaves;
    out.source_dim = hodge.h_basis.size();
    out.target_dim = A.dim();
    if (t.is_leaf()) {
      for (std::size_t j = 0; j < hodge.h_basis.size(); ++j) {
        std::vector<K> col(A.dim());
        for (std::size_t i = 0; i < A.dim(); ++i) col[i] = hodge.incl(i, j);
        out.add({static_cast<int>(j)}, col);
      }
    } else if (!h_is_zero) {
      auto rw = raw(t);
      for (const auto& [tp, v] : rw.cols) out.add(tp, hodge.htpy.apply(v));
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
  }
};

}  // namespace detail

// Per-tree transfer term p(m_{n,T}) for tests and diagnostics: the map
// H^{otimes n} -> H for one tree, with the fixed sign rule.
template <class K>
MultilinearMap<K> transfer_term_for_tree(const HodgeData<K>& hodge, const BinaryTree& t) {
  detail::TreeEval<K> ev(hodge);
  auto rw = ev.raw(t);
  MultilinearMap<K> out;
  out.arity = t.leaves;
  out.source_dim = hodge.h_basis.size();
  out.target_dim = hodge.h_basis.size();
  for (const auto& [tp, v] : rw.cols) out.add(tp, hodge.proj.apply(v));
  return out;
}

// Same tree term with h at the root instead of p (morphism components).
template <class K>
MultilinearMap<K> morphism_term_for_tree(const HodgeData<K>& hodge, const BinaryTree& t) {
  detail::TreeEval<K> ev(hodge);
  auto rw = ev.raw(t);
  MultilinearMap<K> out;
  out.arity = t.leaves;
  out.source_dim = hodge.h_basis.size();
  out.target_dim = hodge.algebra->dim();
  for (const auto& [tp, v] : rw.cols) out.add(tp, hodge.htpy.apply(v));
  return out;
}

namespace detail {

template <class K>
void transfer_all(const HodgeData<K>& hodge, int N, AInfinityStructure<K>* m_out,
                  TransferData<K>* i_out) {
  TreeEval<K> ev(hodge);
  std::size_t hdim = hodge.h_basis.size();
  if (m_out) {
    m_out->h_basis = hodge.h_basis;
    m_out->max_arity = N;
  }
  if (i_out) {
    i_out->h_basis = hodge.h_basis;
    i_out->max_arity = N;
    MultilinearMap<K> i1;
    i1.arity = 1;
    i1.source_dim = hdim;
    i1.target_dim = hodge.algebra->dim();
    for (std::size_t j = 0; j < hdim; ++j) {
      std::vector<K> col(hodge.algebra->dim());
      for (std::size_t i = 0; i < hodge.algebra->dim(); ++i) col[i] = hodge.incl(i, j);
      i1.add({static_cast<int>(j)}, col);
    }
    i_out->components[1] = std::move(i1);
  }
  for (int n = 2; n <= N; ++n) {
    MultilinearMap<K> mn, in;
    mn.arity = in.arity = n;
    mn.source_dim = in.source_dim = hdim;
    mn.target_dim = hdim;
    in.target_dim = hodge.algebra->dim();
    for (const auto& t : enumerate_trees(n)) {
      auto rw = ev.raw(t);
      for (const auto& [tp, v] : rw.cols) {
        if (m_out) mn.add(tp, hodge.proj.apply(v));
        if (i_out) in.add(tp, hodge.htpy.apply(v));
      }
    }
    if (m_out) m_out->bar_products[n] = std::move(mn);
    if (i_out) i_out->components[n] = std::move(in);
  }
}

}  // namespace detail

template <class K>
AInfinityStructure<K> transfer_m(const HodgeData<K>& hodge, int N) {
  AInfinityStructure<K> out;
  detail::transfer_all(hodge, N, &out, static_cast<TransferData<K>*>(nullptr));
  return out;
}

template <class K>
TransferData<K> transfer_I(const HodgeData<K>& hodge, int N) {
  TransferData<K> out;
  detail::transfer_all(hodge, N, static_cast<AInfinityStructure<K>*>(nullptr), &out);
  return out;
}

template <class K>
void transfer_both(const HodgeData<K>& hodge, int N, AInfinityStructure<K>& m,
                   TransferData<K>& I) {
  detail::transfer_all(hodge, N, &m, &I);
}

// Stasheff identities in bar form: for every input count n,
//   sum_{r+s+t=n} (-1)^{||x_1..x_r||} b_{r+1+t}(1^r ox b_s ox 1^t) = 0.
// Checked on the support of the inner products; tuples on which every
// inner application vanishes hold trivially.
template <class K>
CheckReport check_stasheff(const AInfinityStructure<K>& ainf) {
  std::size_t hdim = ainf.dim();
  int N = ainf.max_arity;
  for (int n = 3; n <= N + 1; ++n) {
    // defect accumulated per full tuple
    MultilinearMap<K> defect;
    defect.arity = n;
    defect.source_dim = hdim;
    defect.target_dim = hdim;
    for (int s = 2; s <= n - 1; ++s) {
      int outer = n - s + 1;
      if (outer < 2 || outer > N || s > N) continue;
      const auto& bs = ainf.bar(s);
      const auto& bo = ainf.bar(outer);
      if (bs.is_zero() || bo.is_zero()) continue;
      for (const auto& [inner_tuple, inner_val] : bs.cols) {
        // all prefix/suffix tuples
        int rt = n - s;
        std::vector<int> ctx(rt, 0);
        bool done = rt == 0;
        while (true) {
          for (int r = 0; r <= rt; ++r) {
            int kz = 0;
            for (int j = 0; j < r; ++j) kz += ainf.bar_degree(ctx[j]);
            K sgn = (((kz % 2) + 2) % 2 == 0) ? K(1) : K(-1);
            // outer tuple = ctx[0..r) ++ [k] ++ ctx[r..rt)
            for (std::size_t k = 0; k < hdim; ++k) {
              if (inner_val[k] == K(0)) continue;
              std::vector<int> outer_tuple;
              outer_tuple.reserve(outer);
              for (int j = 0; j < r; ++j) outer_tuple.push_back(ctx[j]);
              outer_tuple.push_back(static_cast<int>(k));
              for (int j = r; j < rt; ++j) outer_tuple.push_back(ctx[j]);
              const auto* oc = bo.column(outer_tuple);
              if (!oc) continue;
              std::vector<int> full;
              full.reserve(n);
              for (int j = 0; j < r; ++j) full.push_back(ctx[j]);
              full.insert(full.end(), inner_tuple.begin(), inner_tuple.end());
              for (int j = r; j < rt; ++j) full.push_back(ctx[j]);
              defect.add(full, *oc, sgn * inner_val[k]);
            }
          }
          if (done) break;
          int pos = rt - 1;
          while (pos >= 0 && ctx[pos] + 1 == static_cast<int>(hdim)) ctx[pos--] = 0;
          if (pos < 0) break;
          ++ctx[pos];
        }
      }
    }
    if (!defect.is_zero()) {
      const auto& [tuple, val] = *defect.cols.begin();
      std::string t;
      for (int i : tuple) t += ainf.h_basis[i].name + " ";
      (void)val;
      return {false, "Stasheff identity fails at input count " + std::to_string(n) +
                         " on tuple " + t};
    }
  }
  return {true, ""};
}

// A-infinity morphism identities in bar form against the dg-algebra:
//   sum_{r+s+t=n} (-1)^{||prefix||} I_{r+1+t}(1^r ox b_s ox 1^t)
//     = d I_n(x) + sum_{s+t=n} b2^A(I_s ox I_t).
template <class K>
CheckReport check_morphism(const HodgeData<K>& hodge, const AInfinityStructure<K>& ainf,
                           const TransferData<K>& tdata, int N) {
  const DgAlgebra<K>& A = *hodge.algebra;
  std::size_t hdim = ainf.dim();
  std::vector<int> bar_deg;
  for (const auto& g : ainf.h_basis) bar_deg.push_back(g.degree - 1);

  for (int n = 2; n <= N; ++n) {
    std::vector<int> tuple(n, 0);
    while (true) {
      std::vector<K> lhs(A.dim(), K(0)), rhs(A.dim(), K(0));
      // LHS: precompose with inner bar products
      for (int s = 2; s <= n; ++s) {
        if (s > ainf.max_arity) continue;
        int outer = n - s + 1;
        if (outer > tdata.max_arity) continue;
        for (int r = 0; r + s <= n; ++r) {
          std::vector<int> inner(tuple.begin() + r, tuple.begin() + r + s);
          const auto* iv = ainf.bar(s).column(inner);
          if (!iv) continue;
          int kz = 0;
          for (int j = 0; j < r; ++j) kz += bar_deg[tuple[j]];
          K sgn = (((kz % 2) + 2) % 2 == 0) ? K(1) : K(-1);
          for (std::size_t k = 0; k < hdim; ++k) {
            if ((*iv)[k] == K(0)) continue;
            std::vector<int> outer_tuple(tuple.begin(), tuple.begin() + r);
            outer_tuple.push_back(static_cast<int>(k));
            outer_tuple.insert(outer_tuple.end(), tuple.begin() + r + s, tuple.end());
            const auto* oc = tdata.I(outer).column(outer_tuple);
            if (!oc) continue;
            K c = sgn * (*iv)[k];
            for (std::size_t q = 0; q < A.dim(); ++q) lhs[q] += c * (*oc)[q];
          }
        }
      }
      // RHS: d I_n + sum of shifted products of two components
      if (const auto* c = tdata.I(n).column(tuple)) {
        auto dv = A.d().apply(*c);
        for (std::size_t q = 0; q < A.dim(); ++q) rhs[q] += dv[q];
      }
      for (int s = 1; s <= n - 1; ++s) {
        int t = n - s;
        if (s > tdata.max_arity || t > tdata.max_arity) continue;
        std::vector<int> lt(tuple.begin(), tuple.begin() + s);
        std::vector<int> rt(tuple.begin() + s, tuple.end());
        const auto* lv = tdata.I(s).column(lt);
        const auto* rv = tdata.I(t).column(rt);
        if (!lv || !rv) continue;
        int ld = 0;
        for (int j : lt) ld += bar_deg[j];
        auto pr = detail::shifted_product(A, *lv, ld, *rv);
        for (std::size_t q = 0; q < A.dim(); ++q) rhs[q] += pr[q];
      }
      for (std::size_t q = 0; q < A.dim(); ++q)
        if (lhs[q] != rhs[q]) {
          std::string t;
          for (int i : tuple) t += ainf.h_basis[i].name + " ";
          return {false,
                  "morphism identity fails at input count " + std::to_string(n) + " on " + t};
        }
      int pos = n - 1;
      while (pos >= 0 && tuple[pos] + 1 == static_cast<int>(hdim)) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }
  return {true, ""};
}

}  // namespace eql

#endif
