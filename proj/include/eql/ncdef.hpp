#ifndef EQL_NCDEF_HPP
#define EQL_NCDEF_HPP

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eql/moduli.hpp"
#include "eql/potential.hpp"
#include "eql/series.hpp"

// Non-commutative deformation towers: truncated quotient path algebras
// with normal-word bases, finite-dimensional right modules, projective
// resolutions and Ext^1, iterated universal extensions E^(n) with
// endomorphism algebras R^(n), the hull comparison R^(n) = A/m^{n+1},
// and the equivalence functor Phi = - (x)_R E.

namespace eql {

// Finite-dimensional pointed algebra k^r + m: a basis split into
// orthogonal idempotents (one per vertex) and a spanning set of the
// nilpotent ideal m, with dense structure constants.
template <class K>
struct FinAlgebra {
  std::vector<std::string> names;
  std::vector<int> degree;            // radical filtration degree; 0 exactly on idempotents
  std::vector<int> idempotents;       // basis indices of e_1..e_r, in vertex order
  std::vector<int> vertex_of_idem;    // vertex label per idempotent
  std::vector<std::vector<std::vector<K>>> mult;  // mult[i][j] = coefficients of b_i b_j
  std::vector<int> generators;        // indices whose action determines a module

  std::size_t dim() const { return names.size(); }

  std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y) const {
    std::vector<K> r(dim(), K(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == K(0)) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == K(0)) continue;
        const auto& c = mult[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (c[k] != K(0)) r[k] += x[i] * y[j] * c[k];
      }
    }
    return r;
  }
};

// A^(n) = (path algebra mod relations) / (arrow ideal)^{n+1}, with a
// basis of normal words: the words of length <= n outside the leading
// terms of the truncated two-sided ideal.
template <class K>
class QuotientAlgebra {
 public:
  QuotientAlgebra(const Quiver* q, const RelationSet<K>& reln, int order)
      : quiver_(q), order_(order) {
    for (int a : q->vertices())
      for (int b : q->vertices())
        for (auto& w : enumerate_paths(*q, a, b, order)) all_words_.push_back(w);
    std::sort(all_words_.begin(), all_words_.end());
    for (std::size_t i = 0; i < all_words_.size(); ++i) windex_[all_words_[i]] = i;

    // truncated two-sided ideal: spans of a . f . b over words a, b
    std::vector<std::vector<K>> gens;
    for (const auto& f : reln.relations) {
      if (!f.endpoints()) throw std::invalid_argument("relation needs declared endpoints");
      auto [fs, ft] = *f.endpoints();
      for (const auto& a : all_words_) {
        if (a.target(*q) != fs) continue;
        for (const auto& b : all_words_) {
          if (b.source(*q) != ft) continue;
          std::vector<K> vec(all_words_.size(), K(0));
          bool nz = false;
          for (const auto& [w, c] : f.coefficients()) {
            int len = static_cast<int>(a.length() + w.length() + b.length());
            if (len > order) continue;
            std::vector<int> es = a.edges;
            es.insert(es.end(), w.edges.begin(), w.edges.end());
            es.insert(es.end(), b.edges.begin(), b.edges.end());
            PathWord full = es.empty() ? PathWord::trivial(a.source(*q)) : PathWord::of(es);
            vec[windex_.at(full)] += c;
            nz = true;
          }
          if (nz) gens.push_back(std::move(vec));
        }
      }
    }
    Matrix<K> m(gens.size(), all_words_.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t c = 0; c < all_words_.size(); ++c) m(r, c) = gens[r][c];
    auto pivots = m.rref();
    ideal_rows_ = Matrix<K>(pivots.size(), all_words_.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < all_words_.size(); ++c) ideal_rows_(r, c) = m(r, c);
    pivot_cols_ = pivots;
    std::vector<bool> is_piv(all_words_.size(), false);
    for (auto p : pivots) is_piv[p] = true;
    for (std::size_t i = 0; i < all_words_.size(); ++i)
      if (!is_piv[i]) normal_.push_back(static_cast<int>(i));

    build_algebra();
  }

  const Quiver& quiver() const { return *quiver_; }
  int order() const { return order_; }
  const FinAlgebra<K>& algebra() const { return alg_; }
  std::size_t dim() const { return normal_.size(); }
  const PathWord& word(int basis_idx) const { return all_words_[normal_[basis_idx]]; }

  int source_of(int basis_idx) const { return word(basis_idx).source(*quiver_); }
  int target_of(int basis_idx) const { return word(basis_idx).target(*quiver_); }

  // Class of an arbitrary word in the normal-word basis.
  std::vector<K> reduce_word(const PathWord& w) const {
    std::vector<K> out(dim(), K(0));
    if (static_cast<int>(w.length()) > order_) return out;
    std::vector<K> amb(all_words_.size(), K(0));
    amb[windex_.at(w)] = K(1);
    reduce(amb);
    for (std::size_t i = 0; i < normal_.size(); ++i) out[i] = amb[normal_[i]];
    return out;
  }

 private:
  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
      K c = v[pivot_cols_[r]];
      if (c == K(0)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * ideal_rows_(r, j);
    }
  }

  void build_algebra() {
    std::size_t n = dim();
    alg_.names.resize(n);
    alg_.degree.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = word(static_cast<int>(i));
      std::string nm;
      if (w.length() == 0) {
        nm = "e" + std::to_string(w.trivial_vertex);
      } else {
        for (std::size_t t = 0; t < w.edges.size(); ++t)
          nm += (t ? "." : "") + std::string("a") + std::to_string(w.edges[t]);
      }
      alg_.names[i] = nm;
      alg_.degree[i] = static_cast<int>(w.length());
      if (w.length() == 0) {
        alg_.idempotents.push_back(static_cast<int>(i));
        alg_.vertex_of_idem.push_back(w.trivial_vertex);
      }
    }
    alg_.mult.assign(n, std::vector<std::vector<K>>(n, std::vector<K>(n, K(0))));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& wi = word(static_cast<int>(i));
        const auto& wj = word(static_cast<int>(j));
        if (wi.target(*quiver_) != wj.source(*quiver_)) continue;
        if (static_cast<int>(wi.length() + wj.length()) > order_) continue;
        PathWord w;
        if (wi.length() + wj.length() == 0) {
          w = PathWord::trivial(wi.trivial_vertex);
        } else {
          w.edges = wi.edges;
          w.edges.insert(w.edges.end(), wj.edges.begin(), wj.edges.end());
        }
        alg_.mult[i][j] = reduce_word(w);
      }
    for (std::size_t i = 0; i < n; ++i)
      if (alg_.degree[i] <= 1) alg_.generators.push_back(static_cast<int>(i));
  }

  const Quiver* quiver_;
  int order_;
  std::vector<PathWord> all_words_;
  std::map<PathWord, std::size_t> windex_;
  Matrix<K> ideal_rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<int> normal_;  // indices into all_words_
  FinAlgebra<K> alg_;
};

// Right module: act[b] * v = coordinates of v . b_b.
template <class K>
struct FDModule {
  const FinAlgebra<K>* alg = nullptr;
  int d = 0;
  std::vector<Matrix<K>> act;  // one matrix per algebra basis element

  Matrix<K> act_of(const std::vector<K>& a) const {
    Matrix<K> m(d, d);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != K(0)) m = m + a[i] * act[i];
    return m;
  }
};

// Module axioms against the structure constants, plus unitality.
template <class K>
CheckReport check_module(const FDModule<K>& M) {
  const FinAlgebra<K>& A = *M.alg;
  Matrix<K> unit(M.d, M.d);
  for (int e : A.idempotents) unit = unit + M.act[e];
  if (!(unit == Matrix<K>::identity(M.d))) return {false, "idempotents do not sum to id"};
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Matrix<K> lhs = M.act[j] * M.act[i];
      Matrix<K> rhs(M.d, M.d);
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (A.mult[i][j][k] != K(0)) rhs = rhs + A.mult[i][j][k] * M.act[k];
      if (!(lhs == rhs))
        return {false, "action breaks on " + A.names[i] + " . " + A.names[j]};
    }
  return {true, ""};
}

template <class K>
FDModule<K> vertex_simple_module(const FinAlgebra<K>& A, int idem_pos) {
  FDModule<K> m;
  m.alg = &A;
  m.d = 1;
  m.act.assign(A.dim(), Matrix<K>(1, 1));
  m.act[A.idempotents[idem_pos]](0, 0) = K(1);
  return m;
}

template <class K>
FDModule<K> direct_sum(const std::vector<const FDModule<K>*>& parts) {
  FDModule<K> out;
  out.alg = parts.empty() ? nullptr : parts[0]->alg;
  for (auto* p : parts) out.d += p->d;
  out.act.assign(out.alg->dim(), Matrix<K>(out.d, out.d));
  for (std::size_t b = 0; b < out.alg->dim(); ++b) {
    int off = 0;
    for (auto* p : parts) {
      for (int i = 0; i < p->d; ++i)
        for (int j = 0; j < p->d; ++j) out.act[b](off + i, off + j) = p->act[b](i, j);
      off += p->d;
    }
  }
  return out;
}

// A minimal generating set of M: preimages of a basis of M / M.m,
// tagged with the idempotent position fixing each generator.
template <class K>
std::vector<std::pair<int, std::vector<K>>> module_generators(const FDModule<K>& M);

// Hom_A(M, N). A hom is determined by the images y_t of generators
// x_t; the constraints are y_t in N e_{v_t} together with the module
// relations of M: for every linear dependency among the elements
// x_t . b the same dependency must hold for the y_t . b.
template <class K>
std::vector<Matrix<K>> module_hom_space(const FDModule<K>& M, const FDModule<K>& N) {
  const FinAlgebra<K>& A = *M.alg;
  std::size_t ad = A.dim();
  auto gens = module_generators(M);
  std::size_t g = gens.size();
  if (g == 0) return M.d == 0 ? std::vector<Matrix<K>>{} : throw std::logic_error("no generators");
  // X : (+)_t A -> M, (a_t) -> sum x_t . a_t
  Matrix<K> X(M.d, g * ad);
  for (std::size_t t = 0; t < g; ++t)
    for (std::size_t b = 0; b < ad; ++b) {
      auto col = M.act[b].apply(gens[t].second);
      for (int i = 0; i < M.d; ++i) X(i, t * ad + b) = col[i];
    }
  if (X.rank() != static_cast<std::size_t>(M.d))
    throw std::logic_error("generators do not generate");
  // unknowns: y_t in coordinates of a basis of N e_{v_t}
  std::vector<Matrix<K>> ybasis;
  std::vector<int> yoff;
  int vars = 0;
  for (std::size_t t = 0; t < g; ++t) {
    int e = A.idempotents[gens[t].first];
    Matrix<K> img = Matrix<K>::from_columns(N.d, N.act[e].image_basis());
    yoff.push_back(vars);
    vars += static_cast<int>(img.cols());
    ybasis.push_back(std::move(img));
  }
  // one equation block per relation among the x_t . b
  auto rels = X.kernel_basis();
  Matrix<K> sys(rels.size() * N.d, vars);
  for (std::size_t rr = 0; rr < rels.size(); ++rr)
    for (std::size_t t = 0; t < g; ++t)
      for (std::size_t b = 0; b < ad; ++b) {
        K c = rels[rr][t * ad + b];
        if (c == K(0)) continue;
        // contribution c * act_N[b] * ybasis[t]
        for (int i = 0; i < N.d; ++i)
          for (std::size_t u = 0; u < ybasis[t].cols(); ++u) {
            K s(0);
            for (int k = 0; k < N.d; ++k) s += N.act[b](i, k) * ybasis[t](k, u);
            sys(rr * N.d + i, yoff[t] + u) += c * s;
          }
      }
  // preimages of the standard basis of M under X, to evaluate homs
  auto pre = X.solve_many(Matrix<K>::identity(M.d));
  if (!pre) throw std::logic_error("preimage computation failed");
  std::vector<Matrix<K>> out;
  for (const auto& y : sys.kernel_basis()) {
    // hom value on generators
    std::vector<std::vector<K>> yt(g, std::vector<K>(N.d, K(0)));
    for (std::size_t t = 0; t < g; ++t)
      for (std::size_t u = 0; u < ybasis[t].cols(); ++u)
        for (int i = 0; i < N.d; ++i) yt[t][i] += y[yoff[t] + u] * ybasis[t](i, u);
    Matrix<K> F(N.d, M.d);
    for (int j = 0; j < M.d; ++j)
      for (std::size_t t = 0; t < g; ++t)
        for (std::size_t b = 0; b < ad; ++b) {
          K c = (*pre)(t * ad + b, j);
          if (c == K(0)) continue;
          auto v = N.act[b].apply(yt[t]);
          for (int i = 0; i < N.d; ++i) F(i, j) += c * v[i];
        }
    out.push_back(std::move(F));
  }
  return out;
}

// Projective e_v A^(n), with bookkeeping: which algebra word each basis
// element is, and where the generator sits.
template <class K>
struct ProjectiveModule {
  FDModule<K> mod;
  std::vector<int> summand_vertex;  // vertex (by idempotent position) per summand
  std::vector<int> gen_pos;         // module basis index of each summand's generator
  std::vector<int> elem_word;       // per module basis index: algebra basis index
  std::vector<int> block_off, block_dim;  // extent of each summand
};

template <class K>
ProjectiveModule<K> projective_module(const QuotientAlgebra<K>& A, int idem_pos) {
  const FinAlgebra<K>& alg = A.algebra();
  int v = alg.vertex_of_idem[idem_pos];
  ProjectiveModule<K> P;
  P.summand_vertex = {idem_pos};
  std::vector<int> rows;  // algebra basis indices with source v
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.source_of(static_cast<int>(i)) == v) rows.push_back(static_cast<int>(i));
  P.elem_word = rows;
  P.mod.alg = &alg;
  P.mod.d = static_cast<int>(rows.size());
  P.mod.act.assign(alg.dim(), Matrix<K>(P.mod.d, P.mod.d));
  std::map<int, int> pos;
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
  for (std::size_t b = 0; b < alg.dim(); ++b)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& prod = alg.mult[rows[i]][b];
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (prod[k] != K(0)) P.mod.act[b](pos.at(static_cast<int>(k)), i) = prod[k];
    }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (alg.degree[rows[i]] == 0) P.gen_pos = {static_cast<int>(i)};
  P.block_off = {0};
  P.block_dim = {P.mod.d};
  return P;
}

template <class K>
ProjectiveModule<K> projective_sum(const QuotientAlgebra<K>& A, const std::vector<int>& idems) {
  std::vector<ProjectiveModule<K>> parts;
  for (int t : idems) parts.push_back(projective_module(A, t));
  ProjectiveModule<K> out;
  out.mod.alg = &A.algebra();
  std::vector<const FDModule<K>*> mods;
  for (auto& p : parts) mods.push_back(&p.mod);
  if (parts.empty()) {
    out.mod.d = 0;
    out.mod.act.assign(A.algebra().dim(), Matrix<K>(0, 0));
    return out;
  }
  out.mod = direct_sum(mods);
  int off = 0;
  for (auto& p : parts) {
    out.summand_vertex.push_back(p.summand_vertex[0]);
    out.gen_pos.push_back(off + p.gen_pos[0]);
    out.block_off.push_back(off);
    out.block_dim.push_back(p.mod.d);
    for (int w : p.elem_word) out.elem_word.push_back(w);
    off += p.mod.d;
  }
  return out;
}

namespace detail {

// Reduction data for a subspace: quotient coordinates = the non-pivot
// standard coordinates after eliminating the span.
template <class K>
struct QuotientSpace {
  Matrix<K> rows;                 // rref rows spanning the subspace
  std::vector<std::size_t> pivots;
  std::vector<int> complement;    // quotient basis: standard coordinates

  QuotientSpace(int ambient, const std::vector<std::vector<K>>& span) {
    Matrix<K> m(span.size(), ambient);
    for (std::size_t r = 0; r < span.size(); ++r)
      for (int c = 0; c < ambient; ++c) m(r, c) = span[r][c];
    pivots = m.rref();
    rows = Matrix<K>(pivots.size(), ambient);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (int c = 0; c < ambient; ++c) rows(r, c) = m(r, c);
    std::vector<bool> is_piv(ambient, false);
    for (auto p : pivots) is_piv[p] = true;
    for (int i = 0; i < ambient; ++i)
      if (!is_piv[i]) complement.push_back(i);
  }

  std::vector<K> project(std::vector<K> v) const {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      K c = v[pivots[r]];
      if (c == K(0)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows(r, j);
    }
    std::vector<K> out(complement.size());
    for (std::size_t i = 0; i < complement.size(); ++i) out[i] = v[complement[i]];
    return out;
  }
};

}  // namespace detail

// Projective cover P_0 -> M: one e_v A per top generator.
template <class K>
struct CoverResult {
  ProjectiveModule<K> P;
  Matrix<K> map;  // P -> M
};

template <class K>
std::vector<std::pair<int, std::vector<K>>> module_generators(const FDModule<K>& M) {
  const FinAlgebra<K>& alg = *M.alg;
  // radical image M . m
  std::vector<std::vector<K>> rad_cols;
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    if (alg.degree[b] == 0) continue;
    for (int j = 0; j < M.d; ++j) {
      std::vector<K> c(M.d);
      for (int i = 0; i < M.d; ++i) c[i] = M.act[b](i, j);
      rad_cols.push_back(std::move(c));
    }
  }
  detail::QuotientSpace<K> top(M.d, rad_cols);
  std::vector<std::pair<int, std::vector<K>>> gens;
  std::vector<std::vector<K>> kept_top;
  for (std::size_t t = 0; t < alg.idempotents.size(); ++t) {
    int e = alg.idempotents[t];
    // columns of act[e] span M e_v; keep those independent in the top
    for (int j = 0; j < M.d; ++j) {
      std::vector<K> c(M.d);
      for (int i = 0; i < M.d; ++i) c[i] = M.act[e](i, j);
      auto tc = top.project(c);
      auto trial = kept_top;
      trial.push_back(tc);
      if (Matrix<K>::from_columns(tc.size(), trial).rank() > kept_top.size()) {
        kept_top = std::move(trial);
        gens.emplace_back(static_cast<int>(t), std::move(c));
      }
    }
  }
  return gens;
}

template <class K>
CoverResult<K> projective_cover(const QuotientAlgebra<K>& A, const FDModule<K>& M) {
  auto gens = module_generators(M);
  std::vector<int> idems;
  for (auto& [t, x] : gens) idems.push_back(t);
  CoverResult<K> out{projective_sum(A, idems), Matrix<K>(M.d, 0)};
  out.map = Matrix<K>(M.d, out.P.mod.d);
  for (std::size_t s = 0; s < idems.size(); ++s)
    for (int j = 0; j < out.P.block_dim[s]; ++j) {
      int col = out.P.block_off[s] + j;
      std::vector<K> img = M.act[out.P.elem_word[col]].apply(gens[s].second);
      for (int i = 0; i < M.d; ++i) out.map(i, col) = img[i];
    }
  if (out.map.rank() != static_cast<std::size_t>(M.d))
    throw std::logic_error("projective cover is not surjective");
  return out;
}

// Kernel of a module map as a module, with the inclusion.
template <class K>
struct SubmoduleResult {
  FDModule<K> mod;
  Matrix<K> incl;  // columns: kernel basis in the ambient module
};

template <class K>
SubmoduleResult<K> kernel_submodule(const FDModule<K>& M, const Matrix<K>& f) {
  auto kb = f.kernel_basis();
  SubmoduleResult<K> out;
  out.mod.alg = M.alg;
  out.mod.d = static_cast<int>(kb.size());
  out.incl = Matrix<K>::from_columns(M.d, kb);
  out.mod.act.assign(M.alg->dim(), Matrix<K>(out.mod.d, out.mod.d));
  for (std::size_t b = 0; b < M.alg->dim(); ++b) {
    auto coords = out.incl.solve_many(M.act[b] * out.incl);
    if (!coords) throw std::logic_error("kernel is not a submodule");
    out.mod.act[b] = std::move(*coords);
  }
  return out;
}

// P_len -> ... -> P_0 -> M -> 0.
template <class K>
struct Resolution {
  std::vector<ProjectiveModule<K>> P;
  std::vector<Matrix<K>> d;  // d[j] : P_j -> P_{j-1} for j >= 1
  Matrix<K> aug;             // P_0 -> M
};

template <class K>
Resolution<K> projective_resolution(const QuotientAlgebra<K>& A, const FDModule<K>& M,
                                    int length) {
  Resolution<K> res;
  auto cov = projective_cover(A, M);
  res.P.push_back(cov.P);
  res.aug = cov.map;
  Matrix<K> cur = cov.map;  // current map out of res.P.back()
  for (int j = 1; j <= length; ++j) {
    auto ker = kernel_submodule(res.P.back().mod, cur);
    if (ker.mod.d == 0) {
      ProjectiveModule<K> zero = projective_sum(A, {});
      res.P.push_back(zero);
      res.d.push_back(Matrix<K>(res.P[j - 1].mod.d, 0));
      cur = Matrix<K>(0, 0);
      continue;
    }
    auto cov2 = projective_cover(A, ker.mod);
    res.P.push_back(cov2.P);
    res.d.push_back(ker.incl * cov2.map);
    cur = cov2.map;  // map P_j ->> ker, used for the next kernel; but
    // the next kernel must be taken inside P_j of the composite; the
    // kernel of P_j -> ker equals the kernel of P_j -> P_{j-1} since
    // ker.incl is injective
  }
  return res;
}

// Ext^1(M, N): cocycles as maps P_1 -> N modulo those factoring
// through P_0.
template <class K>
struct ExtData {
  int dim = 0;
  std::vector<Matrix<K>> cocycles;  // each N.d x P_1.d
  Resolution<K> res;                // the resolution of M used
};

namespace detail {

// Coordinates for Hom(P, N) with P a sum of e_v A: a hom is the tuple
// of generator images, each constrained to N e_v.
template <class K>
struct HomProj {
  const ProjectiveModule<K>* P;
  const FDModule<K>* N;
  std::vector<Matrix<K>> gen_basis;  // per summand: column basis of N e_v
  std::vector<int> offset;
  int dim = 0;

  HomProj(const ProjectiveModule<K>& p, const FDModule<K>& n) : P(&p), N(&n) {
    for (std::size_t s = 0; s < p.summand_vertex.size(); ++s) {
      int e = n.alg->idempotents[p.summand_vertex[s]];
      Matrix<K> img = Matrix<K>::from_columns(n.d, n.act[e].image_basis());
      offset.push_back(dim);
      dim += static_cast<int>(img.cols());
      gen_basis.push_back(std::move(img));
    }
  }

  // coords -> full matrix P -> N
  Matrix<K> to_map(const std::vector<K>& coords) const {
    Matrix<K> out(N->d, P->mod.d);
    for (std::size_t s = 0; s < P->summand_vertex.size(); ++s) {
      std::vector<K> gen(N->d, K(0));
      for (std::size_t c = 0; c < gen_basis[s].cols(); ++c)
        for (int i = 0; i < N->d; ++i)
          gen[i] += coords[offset[s] + c] * gen_basis[s](i, c);
      for (int j = 0; j < P->block_dim[s]; ++j) {
        int col = P->block_off[s] + j;
        auto img = N->act[P->elem_word[col]].apply(gen);
        for (int i = 0; i < N->d; ++i) out(i, col) = img[i];
      }
    }
    return out;
  }

  // full matrix (already a module map) -> coords
  std::vector<K> to_coords(const Matrix<K>& f) const {
    std::vector<K> out(dim, K(0));
    for (std::size_t s = 0; s < P->summand_vertex.size(); ++s) {
      std::vector<K> gen(N->d);
      for (int i = 0; i < N->d; ++i) gen[i] = f(i, P->gen_pos[s]);
      auto c = gen_basis[s].solve(gen);
      if (!c) throw std::logic_error("generator image outside N e_v");
      for (std::size_t t = 0; t < c->size(); ++t) out[offset[s] + t] = (*c)[t];
    }
    return out;
  }
};

// Ext^1(M, N) from P_1 -> P_0 -> M -> 0: cocycles are the maps
// P_1 -> N vanishing on ker(d_1) (the image of any continuation of
// the resolution), modulo those factoring through P_0.
template <class K>
std::pair<int, std::vector<Matrix<K>>> ext1_from_resolution(const Resolution<K>& res,
                                                            const FDModule<K>& N) {
  HomProj<K> h0(res.P[0], N), h1(res.P[1], N);
  // delta_1 : Hom(P0, N) -> Hom(P1, N), psi -> psi d1
  Matrix<K> d1mat(h1.dim, h0.dim);
  for (int c = 0; c < h0.dim; ++c) {
    std::vector<K> e(h0.dim, K(0));
    e[c] = K(1);
    auto coords = h1.to_coords(h0.to_map(e) * res.d[0]);
    for (int r = 0; r < h1.dim; ++r) d1mat(r, c) = coords[r];
  }
  // cocycle condition: psi kills ker(d1)
  auto zs = res.d[0].kernel_basis();
  std::vector<Matrix<K>> unit_maps;
  for (int c = 0; c < h1.dim; ++c) {
    std::vector<K> e(h1.dim, K(0));
    e[c] = K(1);
    unit_maps.push_back(h1.to_map(e));
  }
  Matrix<K> cond(zs.size() * N.d, h1.dim);
  for (std::size_t zi = 0; zi < zs.size(); ++zi)
    for (int c = 0; c < h1.dim; ++c) {
      auto v = unit_maps[c].apply(zs[zi]);
      for (int i = 0; i < N.d; ++i) cond(zi * N.d + i, c) = v[i];
    }
  auto cocycles = cond.kernel_basis();
  std::vector<std::vector<K>> span;
  for (int c = 0; c < h0.dim; ++c) {
    std::vector<K> col(h1.dim);
    for (int r = 0; r < h1.dim; ++r) col[r] = d1mat(r, c);
    span.push_back(std::move(col));
  }
  std::size_t base_rank = Matrix<K>::from_columns(h1.dim, span).rank();
  std::vector<Matrix<K>> reps;
  for (const auto& z : cocycles) {
    auto trial = span;
    trial.push_back(z);
    if (Matrix<K>::from_columns(h1.dim, trial).rank() > base_rank) {
      span = std::move(trial);
      ++base_rank;
      reps.push_back(h1.to_map(z));
    }
  }
  return {static_cast<int>(reps.size()), std::move(reps)};
}

}  // namespace detail

template <class K>
ExtData<K> ext_space(const QuotientAlgebra<K>& A, const FDModule<K>& M, const FDModule<K>& N) {
  ExtData<K> out;
  out.res = projective_resolution(A, M, 1);
  auto [dim, reps] = detail::ext1_from_resolution(out.res, N);
  out.dim = dim;
  out.cocycles = std::move(reps);
  return out;
}

// The extension 0 -> N -> E -> M -> 0 classified by a cocycle
// phi : P_1 -> N: E = (N (+) P_0) / { (phi(y), -d_1(y)) }.
template <class K>
struct ExtensionResult {
  FDModule<K> mod;
  Matrix<K> incl;  // N -> E
  Matrix<K> proj;  // E -> M
};

template <class K>
ExtensionResult<K> extension_from_cocycle(const FDModule<K>& N, const FDModule<K>& M,
                                          const Resolution<K>& res, const Matrix<K>& phi) {
  const FDModule<K>& P0 = res.P[0].mod;
  int amb = N.d + P0.d;
  std::vector<std::vector<K>> w;  // the glued submodule W
  for (int j = 0; j < res.P[1].mod.d; ++j) {
    std::vector<K> v(amb, K(0));
    for (int i = 0; i < N.d; ++i) v[i] = phi(i, j);
    for (int i = 0; i < P0.d; ++i) v[N.d + i] = -res.d[0](i, j);
    w.push_back(std::move(v));
  }
  detail::QuotientSpace<K> Q(amb, w);
  ExtensionResult<K> out;
  out.mod.alg = N.alg;
  out.mod.d = static_cast<int>(Q.complement.size());
  out.mod.act.assign(N.alg->dim(), Matrix<K>(out.mod.d, out.mod.d));
  for (std::size_t b = 0; b < N.alg->dim(); ++b)
    for (int j = 0; j < out.mod.d; ++j) {
      std::vector<K> v(amb, K(0));
      v[Q.complement[j]] = K(1);
      std::vector<K> nv(v.begin(), v.begin() + N.d), pv(v.begin() + N.d, v.end());
      auto ni = N.act[b].apply(nv);
      auto pi = P0.act[b].apply(pv);
      std::vector<K> img(amb);
      for (int i = 0; i < N.d; ++i) img[i] = ni[i];
      for (int i = 0; i < P0.d; ++i) img[N.d + i] = pi[i];
      auto q = Q.project(img);
      for (int i = 0; i < out.mod.d; ++i) out.mod.act[b](i, j) = q[i];
    }
  out.incl = Matrix<K>(out.mod.d, N.d);
  for (int j = 0; j < N.d; ++j) {
    std::vector<K> v(amb, K(0));
    v[j] = K(1);
    auto q = Q.project(v);
    for (int i = 0; i < out.mod.d; ++i) out.incl(i, j) = q[i];
  }
  out.proj = Matrix<K>(M.d, out.mod.d);
  for (int j = 0; j < out.mod.d; ++j) {
    int c = Q.complement[j];
    if (c >= N.d)
      for (int i = 0; i < M.d; ++i) out.proj(i, j) = res.aug(i, c - N.d);
  }
  return out;
}

// One universal-extension step: 0 -> (+)_j S_j^{d_j} -> E -> M -> 0
// with d_j = dim Ext^1(M, S_j).
template <class K>
struct UniversalExtension {
  FDModule<K> mod;
  Matrix<K> proj;             // E -> M
  std::vector<int> ext_dims;  // per vertex
};

template <class K>
UniversalExtension<K> universal_extension(const QuotientAlgebra<K>& A, const FDModule<K>& M) {
  const FinAlgebra<K>& alg = A.algebra();
  Resolution<K> res = projective_resolution(A, M, 1);
  std::vector<FDModule<K>> simples;
  std::vector<std::vector<Matrix<K>>> cocycles(alg.idempotents.size());
  std::vector<int> dims;
  for (std::size_t t = 0; t < alg.idempotents.size(); ++t) {
    simples.push_back(vertex_simple_module(alg, static_cast<int>(t)));
    auto [dj, reps] = detail::ext1_from_resolution(res, simples[t]);
    cocycles[t] = std::move(reps);
    dims.push_back(dj);
  }
  std::vector<FDModule<K>> copies;
  std::vector<Matrix<K>> rows;  // stacked cocycle rows, matching N's summands
  for (std::size_t t = 0; t < alg.idempotents.size(); ++t)
    for (const auto& c : cocycles[t]) {
      copies.push_back(simples[t]);
      rows.push_back(c);  // 1 x P1.d
    }
  UniversalExtension<K> out;
  out.ext_dims = dims;
  if (rows.empty()) {
    out.mod = M;
    out.proj = Matrix<K>::identity(M.d);
    return out;
  }
  std::vector<const FDModule<K>*> parts;
  for (auto& c : copies) parts.push_back(&c);
  FDModule<K> N = direct_sum(parts);
  Matrix<K> phi(N.d, res.P[1].mod.d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < res.P[1].mod.d; ++j) phi(r, j) = rows[r](0, j);
  auto ext = extension_from_cocycle(N, M, res, phi);
  out.mod = std::move(ext.mod);
  out.proj = std::move(ext.proj);
  return out;
}

// --- the deformation tower --------------------------------------------

template <class K>
struct TowerLevel {
  std::vector<FDModule<K>> Ei;          // one per vertex
  std::vector<Matrix<K>> proj_i;        // E_i^(n) -> E_i^(n-1); empty at level 0
  std::vector<Matrix<K>> tau;           // E_i^(n) -> S_i (1 x dim)
  FDModule<K> E;                        // (+)_i E_i
  std::vector<int> block_off;
  std::vector<Matrix<K>> endo_basis;    // pointed basis of End(E): eps_i then rad
  FinAlgebra<K> R;
  Matrix<K> surj;                       // R^(n) -> R^(n-1) in R coordinates
};

template <class K>
struct NcTower {
  const QuotientAlgebra<K>* ambient;
  std::vector<TowerLevel<K>> levels;
};

template <class K>
NcTower<K> build_tower(const QuotientAlgebra<K>& ambient, int n_max) {
  const FinAlgebra<K>& alg = ambient.algebra();
  std::size_t r = alg.idempotents.size();
  NcTower<K> tower;
  tower.ambient = &ambient;
  for (int n = 0; n <= n_max; ++n) {
    TowerLevel<K> lvl;
    if (n == 0) {
      for (std::size_t i = 0; i < r; ++i) {
        lvl.Ei.push_back(vertex_simple_module(alg, static_cast<int>(i)));
        lvl.tau.push_back(Matrix<K>::identity(1));
      }
    } else {
      const TowerLevel<K>& prev = tower.levels.back();
      for (std::size_t i = 0; i < r; ++i) {
        auto u = universal_extension(ambient, prev.Ei[i]);
        lvl.Ei.push_back(std::move(u.mod));
        lvl.proj_i.push_back(u.proj);
        lvl.tau.push_back(prev.tau[i] * u.proj);
      }
    }
    std::vector<const FDModule<K>*> parts;
    for (auto& m : lvl.Ei) parts.push_back(&m);
    lvl.E = direct_sum(parts);
    int off = 0;
    for (auto& m : lvl.Ei) {
      lvl.block_off.push_back(off);
      off += m.d;
    }

    // End(E), reorganized to a pointed basis
    auto raw = module_hom_space(lvl.E, lvl.E);
    std::vector<Matrix<K>> eps;
    for (std::size_t i = 0; i < r; ++i) {
      Matrix<K> p(lvl.E.d, lvl.E.d);
      for (int j = 0; j < lvl.Ei[i].d; ++j)
        p(lvl.block_off[i] + j, lvl.block_off[i] + j) = K(1);
      eps.push_back(std::move(p));
    }
    // q(phi) = (lambda_i) with tau_i phi_ii = lambda_i tau_i
    auto q_of = [&](const Matrix<K>& phi) {
      std::vector<K> lam(r, K(0));
      for (std::size_t i = 0; i < r; ++i) {
        Matrix<K> tau_full(1, lvl.E.d);
        for (int j = 0; j < lvl.Ei[i].d; ++j)
          tau_full(0, lvl.block_off[i] + j) = lvl.tau[i](0, j);
        Matrix<K> comp = tau_full * eps[i] * phi * eps[i];
        // comp is 1 x E.d supported on block i; find lambda with
        // comp = lambda * (tau_i on block i)
        K lambda(0);
        bool found = false;
        for (int j = 0; j < lvl.Ei[i].d; ++j) {
          K t = lvl.tau[i](0, j);
          if (t != K(0)) {
            lambda = comp(0, lvl.block_off[i] + j) / t;
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("tau_i vanished");
        for (int j = 0; j < lvl.E.d; ++j) {
          K expect = K(0);
          if (j >= lvl.block_off[i] && j < lvl.block_off[i] + lvl.Ei[i].d)
            expect = lambda * lvl.tau[i](0, j - lvl.block_off[i]);
          if (comp(0, j) != expect)
            throw std::logic_error("tau_i phi_ii is not a multiple of tau_i");
        }
        lam[i] = lambda;
      }
      return lam;
    };
    Matrix<K> qmat(r, raw.size());
    for (std::size_t c = 0; c < raw.size(); ++c) {
      auto lam = q_of(raw[c]);
      for (std::size_t i = 0; i < r; ++i) qmat(i, c) = lam[i];
    }
    std::vector<Matrix<K>> rad;
    for (const auto& v : qmat.kernel_basis()) {
      Matrix<K> m(lvl.E.d, lvl.E.d);
      for (std::size_t c = 0; c < raw.size(); ++c)
        if (v[c] != K(0)) m = m + v[c] * raw[c];
      rad.push_back(std::move(m));
    }
    if (r + rad.size() != raw.size())
      throw std::logic_error("pointed reorganization lost dimensions");
    lvl.endo_basis = eps;
    for (auto& m : rad) lvl.endo_basis.push_back(std::move(m));

    // structure constants of R: composition phi_i o phi_j
    std::size_t rd = lvl.endo_basis.size();
    auto flat = [&](const Matrix<K>& m) {
      std::vector<K> v(lvl.E.d * lvl.E.d);
      for (int a = 0; a < lvl.E.d; ++a)
        for (int b = 0; b < lvl.E.d; ++b) v[a * lvl.E.d + b] = m(a, b);
      return v;
    };
    std::vector<std::vector<K>> cols;
    for (auto& m : lvl.endo_basis) cols.push_back(flat(m));
    Matrix<K> basis_mat = Matrix<K>::from_columns(lvl.E.d * lvl.E.d, cols);
    // all rd^2 products at once
    std::vector<std::vector<K>> prod_cols;
    for (std::size_t i = 0; i < rd; ++i)
      for (std::size_t j = 0; j < rd; ++j)
        prod_cols.push_back(flat(lvl.endo_basis[i] * lvl.endo_basis[j]));
    auto prod_coords =
        basis_mat.solve_many(Matrix<K>::from_columns(lvl.E.d * lvl.E.d, prod_cols));
    if (!prod_coords) throw std::logic_error("endomorphism outside End(E) span");
    lvl.R.names.resize(rd);
    lvl.R.degree.resize(rd);
    for (std::size_t i = 0; i < rd; ++i) {
      lvl.R.names[i] = i < r ? "eps" + std::to_string(i) : "r" + std::to_string(i - r);
      lvl.R.degree[i] = i < r ? 0 : 1;
      if (i < r) {
        lvl.R.idempotents.push_back(static_cast<int>(i));
        lvl.R.vertex_of_idem.push_back(alg.vertex_of_idem[i]);
      }
      lvl.R.generators.push_back(static_cast<int>(i));
    }
    lvl.R.mult.assign(rd, std::vector<std::vector<K>>(rd));
    for (std::size_t i = 0; i < rd; ++i)
      for (std::size_t j = 0; j < rd; ++j) {
        std::vector<K> c(rd);
        for (std::size_t k = 0; k < rd; ++k) c[k] = (*prod_coords)(k, i * rd + j);
        lvl.R.mult[i][j] = std::move(c);
      }

    // surjection R^(n) -> R^(n-1): phibar pi = pi phi
    if (n > 0) {
      const TowerLevel<K>& prev = tower.levels.back();
      Matrix<K> pi(prev.E.d, lvl.E.d);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < prev.Ei[i].d; ++a)
          for (int b = 0; b < lvl.Ei[i].d; ++b)
            pi(prev.block_off[i] + a, lvl.block_off[i] + b) = lvl.proj_i[i](a, b);
      // right inverse of pi
      auto rinv_opt = pi.solve_many(Matrix<K>::identity(prev.E.d));
      if (!rinv_opt) throw std::logic_error("tower projection not surjective");
      Matrix<K> rinv = std::move(*rinv_opt);
      std::vector<std::vector<K>> pcols;
      for (auto& m : prev.endo_basis) {
        std::vector<K> v(prev.E.d * prev.E.d);
        for (int a = 0; a < prev.E.d; ++a)
          for (int b = 0; b < prev.E.d; ++b) v[a * prev.E.d + b] = m(a, b);
        pcols.push_back(std::move(v));
      }
      Matrix<K> prev_basis = Matrix<K>::from_columns(prev.E.d * prev.E.d, pcols);
      lvl.surj = Matrix<K>(prev.endo_basis.size(), rd);
      for (std::size_t c = 0; c < rd; ++c) {
        Matrix<K> phibar = pi * lvl.endo_basis[c] * rinv;
        if (!(phibar * pi == pi * lvl.endo_basis[c]))
          throw std::logic_error("endomorphism does not descend along the tower");
        std::vector<K> v(prev.E.d * prev.E.d);
        for (int a = 0; a < prev.E.d; ++a)
          for (int b = 0; b < prev.E.d; ++b) v[a * prev.E.d + b] = phibar(a, b);
        auto x = prev_basis.solve(v);
        if (!x) throw std::logic_error("descended endomorphism outside End");
        for (std::size_t rr = 0; rr < x->size(); ++rr) lvl.surj(rr, c) = (*x)[rr];
      }
      if (lvl.surj.rank() != prev.endo_basis.size())
        throw std::logic_error("R^(n) -> R^(n-1) is not surjective");
    }
    tower.levels.push_back(std::move(lvl));
  }
  return tower;
}

// --- hull comparison ---------------------------------------------------

// Action of a path word on a module over a quotient algebra: compose
// the arrow actions (independent of normal forms).
template <class K>
Matrix<K> word_action(const QuotientAlgebra<K>& A, const FDModule<K>& M, const PathWord& w) {
  std::map<int, int> arrow_basis;  // edge id -> algebra basis index
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.algebra().degree[i] == 1) arrow_basis[A.word(static_cast<int>(i)).edges[0]] = i;
  Matrix<K> m = Matrix<K>::identity(M.d);
  if (w.length() == 0) {
    auto& idems = A.algebra().idempotents;
    for (std::size_t t = 0; t < idems.size(); ++t)
      if (A.algebra().vertex_of_idem[t] == w.trivial_vertex) return M.act[idems[t]];
    throw std::logic_error("unknown vertex");
  }
  for (int e : w.edges) m = M.act[arrow_basis.at(e)] * m;
  return m;
}

template <class K>
struct HullLevelReport {
  bool pass = false;
  std::string detail;
};

template <class K>
struct HullReport {
  bool pass = true;
  std::vector<HullLevelReport<K>> levels;
};

namespace detail {

// A generator x in E_i e_i making w -> x . w an isomorphism
// e_i A^(n) -> E_i, if one exists among natural candidates.
template <class K>
std::optional<Matrix<K>> find_cyclic_iso(const QuotientAlgebra<K>& An,
                                         const QuotientAlgebra<K>& ambient,
                                         const FDModule<K>& Ei, int idem_pos) {
  int v = An.algebra().vertex_of_idem[idem_pos];
  std::vector<int> words;  // basis of e_v A^(n)
  for (std::size_t i = 0; i < An.dim(); ++i)
    if (An.source_of(static_cast<int>(i)) == v) words.push_back(static_cast<int>(i));
  if (static_cast<int>(words.size()) != Ei.d) return std::nullopt;
  int e_amb = -1;
  for (std::size_t t = 0; t < ambient.algebra().idempotents.size(); ++t)
    if (ambient.algebra().vertex_of_idem[t] == v)
      e_amb = ambient.algebra().idempotents[t];
  auto cand_basis = Ei.act[e_amb].image_basis();
  auto try_x = [&](const std::vector<K>& x) -> std::optional<Matrix<K>> {
    Matrix<K> theta(Ei.d, words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
      auto img = word_action(ambient, Ei, An.word(words[j])).apply(x);
      for (int i = 0; i < Ei.d; ++i) theta(i, j) = img[i];
    }
    if (theta.rank() == static_cast<std::size_t>(Ei.d)) return theta;
    return std::nullopt;
  };
  for (const auto& x : cand_basis)
    if (auto t = try_x(x)) return t;
  std::vector<K> acc(Ei.d, K(0));
  for (const auto& x : cand_basis) {
    for (int i = 0; i < Ei.d; ++i) acc[i] += x[i];
    if (auto t = try_x(acc)) return t;
  }
  if constexpr (field_traits<K>::finite) {
    // exhaustive over the subspace
    auto elems = field_traits<K>::elements();
    std::size_t nb = cand_basis.size();
    std::vector<std::size_t> idx(nb, 0);
    while (true) {
      std::vector<K> x(Ei.d, K(0));
      for (std::size_t t = 0; t < nb; ++t)
        for (int i = 0; i < Ei.d; ++i) x[i] += elems[idx[t]] * cand_basis[t][i];
      if (auto t = try_x(x)) return t;
      std::size_t p = 0;
      while (p < nb && ++idx[p] == elems.size()) idx[p++] = 0;
      if (p == nb) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Compare R^(n) with A^(n) = A/m^{n+1}: exhibit a pointed algebra
// isomorphism psi(a) = Theta L_a Theta^{-1}, and check that the level
// maps R^(n+1) -> R^(n) correspond to the canonical surjections.
template <class K>
HullReport<K> hull_compare(const Quiver* q, const RelationSet<K>& reln, const NcTower<K>& tower,
                           int n_max) {
  HullReport<K> rep;
  const QuotientAlgebra<K>& ambient = *tower.ambient;
  for (int n = 0; n <= n_max; ++n) {
    HullLevelReport<K> lv;
    const TowerLevel<K>& lvl = tower.levels[n];
    QuotientAlgebra<K> An(q, reln, n);
    const FinAlgebra<K>& alg = An.algebra();
    auto fail = [&](const std::string& why) {
      lv.pass = false;
      lv.detail = "level " + std::to_string(n) + ": " + why;
      rep.levels.push_back(lv);
      rep.pass = false;
    };
    if (An.dim() != lvl.R.dim()) {
      fail("dim A = " + std::to_string(An.dim()) + " but dim R = " +
           std::to_string(lvl.R.dim()));
      continue;
    }
    // Theta : A^(n) -> E, blockwise from cyclic generators
    std::size_t r = alg.idempotents.size();
    Matrix<K> theta(lvl.E.d, An.dim());
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      auto t = detail::find_cyclic_iso(An, ambient, lvl.Ei[i], static_cast<int>(i));
      if (!t) {
        fail("no module isomorphism e_i A -> E_i for i = " + std::to_string(i));
        ok = false;
        break;
      }
      int col = 0;
      for (std::size_t j = 0; j < An.dim(); ++j) {
        if (An.source_of(static_cast<int>(j)) != alg.vertex_of_idem[i]) continue;
        for (int a = 0; a < lvl.Ei[i].d; ++a)
          theta(lvl.block_off[i] + a, j) = (*t)(a, col);
        ++col;
      }
    }
    if (!ok) continue;
    auto theta_inv = theta.inverse();
    if (!theta_inv) {
      fail("Theta is not invertible");
      continue;
    }
    // psi(a) in R coordinates, per algebra basis element
    std::vector<std::vector<K>> fl;
    for (auto& m : lvl.endo_basis) {
      std::vector<K> v(lvl.E.d * lvl.E.d);
      for (int a = 0; a < lvl.E.d; ++a)
        for (int b = 0; b < lvl.E.d; ++b) v[a * lvl.E.d + b] = m(a, b);
      fl.push_back(std::move(v));
    }
    Matrix<K> endo_mat = Matrix<K>::from_columns(lvl.E.d * lvl.E.d, fl);
    Matrix<K> psi(lvl.R.dim(), An.dim());
    ok = true;
    for (std::size_t a = 0; a < An.dim() && ok; ++a) {
      Matrix<K> L(An.dim(), An.dim());
      for (std::size_t j = 0; j < An.dim(); ++j)
        for (std::size_t k = 0; k < An.dim(); ++k) L(k, j) = alg.mult[a][j][k];
      Matrix<K> pm = theta * L * (*theta_inv);
      std::vector<K> v(lvl.E.d * lvl.E.d);
      for (int x = 0; x < lvl.E.d; ++x)
        for (int y = 0; y < lvl.E.d; ++y) v[x * lvl.E.d + y] = pm(x, y);
      auto c = endo_mat.solve(v);
      if (!c) {
        fail("left multiplication does not land in End(E)");
        ok = false;
        break;
      }
      for (std::size_t rr = 0; rr < lvl.R.dim(); ++rr) psi(rr, a) = (*c)[rr];
    }
    if (!ok) continue;
    if (!psi.inverse()) {
      fail("psi is not bijective");
      continue;
    }
    // multiplicativity on the structure constants
    auto psi_col = [&](std::size_t a) {
      std::vector<K> v(lvl.R.dim());
      for (std::size_t rr = 0; rr < lvl.R.dim(); ++rr) v[rr] = psi(rr, a);
      return v;
    };
    for (std::size_t a = 0; a < An.dim() && ok; ++a)
      for (std::size_t b = 0; b < An.dim() && ok; ++b) {
        std::vector<K> lhs = lvl.R.multiply(psi_col(a), psi_col(b));
        std::vector<K> rhs(lvl.R.dim(), K(0));
        for (std::size_t k = 0; k < An.dim(); ++k)
          for (std::size_t rr = 0; rr < lvl.R.dim(); ++rr)
            rhs[rr] += alg.mult[a][b][k] * psi(rr, k);
        if (lhs != rhs) {
          fail("psi is not multiplicative on " + alg.names[a] + ", " + alg.names[b]);
          ok = false;
        }
      }
    if (!ok) continue;
    // pointedness: idempotents match, radical goes to ker q
    for (std::size_t a = 0; a < An.dim() && ok; ++a) {
      auto col = psi_col(a);
      if (alg.degree[a] == 0) {
        std::size_t which = 0;
        for (std::size_t t = 0; t < r; ++t)
          if (alg.idempotents[t] == static_cast<int>(a)) which = t;
        for (std::size_t rr = 0; rr < lvl.R.dim(); ++rr)
          if (col[rr] != (rr == which ? K(1) : K(0))) {
            fail("psi(e_i) != eps_i");
            ok = false;
          }
      } else {
        for (std::size_t t = 0; t < r; ++t)
          if (col[t] != K(0)) {
            fail("psi of a radical element has an idempotent component");
            ok = false;
          }
      }
    }
    if (!ok) continue;
    // (RnE): E^(n+1) / (ker surj) E^(n+1) = E^(n) via the tower map
    if (n < static_cast<int>(tower.levels.size()) - 1) {
      const TowerLevel<K>& up = tower.levels[n + 1];
      std::vector<std::vector<K>> je_cols;
      for (const auto& kv : up.surj.kernel_basis()) {
        Matrix<K> phi(up.E.d, up.E.d);
        for (std::size_t c = 0; c < up.endo_basis.size(); ++c)
          if (kv[c] != K(0)) phi = phi + kv[c] * up.endo_basis[c];
        for (int j = 0; j < up.E.d; ++j) {
          std::vector<K> cc(up.E.d);
          for (int i = 0; i < up.E.d; ++i) cc[i] = phi(i, j);
          je_cols.push_back(std::move(cc));
        }
      }
      detail::QuotientSpace<K> Q(up.E.d, je_cols);
      if (static_cast<int>(Q.complement.size()) != lvl.E.d) {
        fail("(ker surj) E has the wrong codimension");
        continue;
      }
      // induced map Q -> E^(n): pi on the complement coordinates
      Matrix<K> pi(lvl.E.d, up.E.d);
      for (std::size_t i = 0; i < r; ++i)
        for (int a = 0; a < lvl.Ei[i].d; ++a)
          for (int b = 0; b < up.Ei[i].d; ++b)
            pi(lvl.block_off[i] + a, up.block_off[i] + b) = up.proj_i[i](a, b);
      Matrix<K> induced(lvl.E.d, Q.complement.size());
      for (std::size_t j = 0; j < Q.complement.size(); ++j)
        for (int i = 0; i < lvl.E.d; ++i) induced(i, j) = pi(i, Q.complement[j]);
      // well-definedness: pi must kill the glued subspace
      bool well = true;
      for (const auto& cc : je_cols) {
        auto v = pi.apply(cc);
        for (const auto& x : v)
          if (x != K(0)) well = false;
      }
      if (!well || !induced.inverse()) {
        fail("E^(n+1)/(ker surj)E^(n+1) does not match E^(n)");
        continue;
      }
    }
    lv.pass = true;
    rep.levels.push_back(lv);
  }
  return rep;
}

// --- the functors and the equivalence check ----------------------------

// Submodule spanned (and closed) under the action; columns must span
// an invariant subspace.
template <class K>
SubmoduleResult<K> submodule_from_span(const FDModule<K>& M,
                                       const std::vector<std::vector<K>>& span) {
  Matrix<K> raw = Matrix<K>::from_columns(M.d, span);
  SubmoduleResult<K> out;
  out.incl = Matrix<K>::from_columns(M.d, raw.image_basis());
  out.mod.alg = M.alg;
  out.mod.d = static_cast<int>(out.incl.cols());
  out.mod.act.assign(M.alg->dim(), Matrix<K>(out.mod.d, out.mod.d));
  for (std::size_t b = 0; b < M.alg->dim(); ++b) {
    auto c = out.incl.solve_many(M.act[b] * out.incl);
    if (!c) throw std::logic_error("span is not invariant");
    out.mod.act[b] = std::move(*c);
  }
  return out;
}

template <class K>
struct QuotientModuleResult {
  FDModule<K> mod;
  Matrix<K> proj;  // M -> M / W
};

template <class K>
QuotientModuleResult<K> quotient_module(const FDModule<K>& M,
                                        const std::vector<std::vector<K>>& span) {
  detail::QuotientSpace<K> Q(M.d, span);
  QuotientModuleResult<K> out;
  out.mod.alg = M.alg;
  out.mod.d = static_cast<int>(Q.complement.size());
  out.proj = Matrix<K>(out.mod.d, M.d);
  for (int j = 0; j < M.d; ++j) {
    std::vector<K> v(M.d, K(0));
    v[j] = K(1);
    auto q = Q.project(v);
    for (int i = 0; i < out.mod.d; ++i) out.proj(i, j) = q[i];
  }
  out.mod.act.assign(M.alg->dim(), Matrix<K>(out.mod.d, out.mod.d));
  for (std::size_t b = 0; b < M.alg->dim(); ++b)
    for (int j = 0; j < out.mod.d; ++j) {
      std::vector<K> v(M.d, K(0));
      v[Q.complement[j]] = K(1);
      auto q = Q.project(M.act[b].apply(v));
      for (int i = 0; i < out.mod.d; ++i) out.mod.act[b](i, j) = q[i];
    }
  return out;
}

// Phi(T) = T (x)_R E as a right module over the ambient algebra, with
// the dimension vector of its composition factors.
template <class K>
struct PhiResult {
  FDModule<K> mod;              // over the ambient algebra
  std::map<int, int> jh_dims;   // vertex -> multiplicity of S_v
};

template <class K>
PhiResult<K> functor_phi(const TowerLevel<K>& lvl, const QuotientAlgebra<K>& ambient,
                         const FDModule<K>& T) {
  const FinAlgebra<K>& R = lvl.R;
  int td = T.d, ed = lvl.E.d;
  int amb = td * ed;  // t (x) x at index t*ed + x
  std::vector<std::vector<K>> glue;
  for (std::size_t b = 0; b < R.dim(); ++b) {
    const Matrix<K>& rho = lvl.endo_basis[b];  // left action of r_b on E
    for (int t = 0; t < td; ++t)
      for (int x = 0; x < ed; ++x) {
        // (e_t . r_b) (x) e_x - e_t (x) (r_b . e_x)
        std::vector<K> v(amb, K(0));
        for (int s = 0; s < td; ++s) v[s * ed + x] += T.act[b](s, t);
        for (int y = 0; y < ed; ++y) v[t * ed + y] -= rho(y, x);
        glue.push_back(std::move(v));
      }
  }
  detail::QuotientSpace<K> Q(amb, glue);
  PhiResult<K> out;
  out.mod.alg = &ambient.algebra();
  out.mod.d = static_cast<int>(Q.complement.size());
  out.mod.act.assign(ambient.dim(), Matrix<K>(out.mod.d, out.mod.d));
  for (std::size_t b = 0; b < ambient.dim(); ++b)
    for (int j = 0; j < out.mod.d; ++j) {
      int t = Q.complement[j] / ed, x = Q.complement[j] % ed;
      std::vector<K> img(amb, K(0));
      for (int y = 0; y < ed; ++y) img[t * ed + y] = lvl.E.act[b](y, x);
      auto q = Q.project(img);
      for (int i = 0; i < out.mod.d; ++i) out.mod.act[b](i, j) = q[i];
    }
  for (std::size_t t = 0; t < ambient.algebra().idempotents.size(); ++t) {
    int e = ambient.algebra().idempotents[t];
    out.jh_dims[ambient.algebra().vertex_of_idem[t]] =
        static_cast<int>((out.mod.act[e]).rank());
  }
  return out;
}

// Psi(U) = Hom_A(E, U) as a right R-module.
template <class K>
FDModule<K> functor_psi(const TowerLevel<K>& lvl, const FDModule<K>& U) {
  auto homs = module_hom_space(lvl.E, U);
  FDModule<K> out;
  out.alg = &lvl.R;
  out.d = static_cast<int>(homs.size());
  out.act.assign(lvl.R.dim(), Matrix<K>(out.d, out.d));
  if (homs.empty()) return out;
  int fd = U.d * lvl.E.d;
  auto flat = [&](const Matrix<K>& m) {
    std::vector<K> v(fd);
    for (int a = 0; a < U.d; ++a)
      for (int b = 0; b < lvl.E.d; ++b) v[a * lvl.E.d + b] = m(a, b);
    return v;
  };
  std::vector<std::vector<K>> cols;
  for (auto& h : homs) cols.push_back(flat(h));
  Matrix<K> basis = Matrix<K>::from_columns(fd, cols);
  for (std::size_t b = 0; b < lvl.R.dim(); ++b) {
    std::vector<std::vector<K>> imgs;
    for (auto& h : homs) imgs.push_back(flat(h * lvl.endo_basis[b]));
    auto c = basis.solve_many(Matrix<K>::from_columns(fd, imgs));
    if (!c) throw std::logic_error("Hom(E, U) is not R-stable");
    out.act[b] = std::move(*c);
  }
  return out;
}

// Isomorphism test: some invertible element of Hom(M, N).
template <class K>
bool modules_isomorphic(const FDModule<K>& M, const FDModule<K>& N) {
  if (M.d != N.d) return false;
  if (M.d == 0) return true;
  auto homs = module_hom_space(M, N);
  for (auto& h : homs)
    if (h.inverse()) return true;
  if constexpr (field_traits<K>::finite) {
    auto elems = field_traits<K>::elements();
    if (std::pow(static_cast<double>(elems.size()), static_cast<double>(homs.size())) <=
        65536.0) {
      std::vector<std::size_t> idx(homs.size(), 0);
      while (true) {
        Matrix<K> h(M.d, M.d);
        for (std::size_t t = 0; t < homs.size(); ++t)
          if (elems[idx[t]] != K(0)) h = h + elems[idx[t]] * homs[t];
        if (h.inverse()) return true;
        std::size_t p = 0;
        while (p < homs.size() && ++idx[p] == elems.size()) idx[p++] = 0;
        if (p == homs.size()) break;
      }
      return false;
    }
  }
  // random-free fallback: sums of subsets
  for (std::size_t mask = 1; mask < (std::size_t(1) << std::min<std::size_t>(homs.size(), 12));
       ++mask) {
    Matrix<K> h(M.d, M.d);
    for (std::size_t t = 0; t < homs.size(); ++t)
      if (mask & (std::size_t(1) << t)) h = h + homs[t];
    if (h.inverse()) return true;
  }
  return false;
}

// All nilpotent right modules over the ambient algebra with total
// dimension <= bound, up to isomorphism (each class appears at least
// once): representatives with a full flag of invariant subspaces.
template <class K>
std::vector<FDModule<K>> enumerate_nilpotent_modules(const QuotientAlgebra<K>& A, int bound) {
  static_assert(field_traits<K>::finite, "exhaustive enumeration needs a finite field");
  const Quiver& q = A.quiver();
  auto elems = field_traits<K>::elements();
  std::vector<FDModule<K>> out;
  std::vector<int> vs = q.vertices();
  for (int d = 1; d <= bound; ++d) {
    // vertex type per flag position
    std::vector<int> type(d, 0);
    while (true) {
      // admissible entries: edge e, positions a < b with matching types
      struct Slot {
        int edge, a, b;
      };
      std::vector<Slot> slots;
      for (const auto& e : q.edges())
        for (int a = 0; a < d; ++a)
          for (int b = a + 1; b < d; ++b)
            if (vs[type[a]] == e.source && vs[type[b]] == e.target)
              slots.push_back({e.id, a, b});
      std::vector<std::size_t> val(slots.size(), 0);
      while (true) {
        FDModule<K> M;
        M.alg = &A.algebra();
        M.d = d;
        M.act.assign(A.dim(), Matrix<K>(d, d));
        // idempotents act as type projections
        for (std::size_t t = 0; t < A.algebra().idempotents.size(); ++t) {
          int v = A.algebra().vertex_of_idem[t];
          Matrix<K>& m = M.act[A.algebra().idempotents[t]];
          for (int i = 0; i < d; ++i)
            if (vs[type[i]] == v) m(i, i) = K(1);
        }
        // arrows from the slot values, longer words as products
        std::map<int, Matrix<K>> arrow;
        for (const auto& e : q.edges()) arrow.emplace(e.id, Matrix<K>(d, d));
        for (std::size_t s = 0; s < slots.size(); ++s)
          arrow.at(slots[s].edge)(slots[s].b, slots[s].a) = elems[val[s]];
        for (std::size_t b = 0; b < A.dim(); ++b) {
          const PathWord& w = A.word(static_cast<int>(b));
          if (w.length() == 0) continue;
          Matrix<K> m = Matrix<K>::identity(d);
          for (int eid : w.edges) m = arrow.at(eid) * m;
          int src = A.source_of(static_cast<int>(b));
          for (std::size_t t = 0; t < A.algebra().idempotents.size(); ++t)
            if (A.algebra().vertex_of_idem[t] == src)
              m = m * M.act[A.algebra().idempotents[t]];
          M.act[b] = std::move(m);
        }
        if (check_module(M).pass) out.push_back(std::move(M));
        std::size_t p = 0;
        while (p < slots.size() && ++val[p] == elems.size()) val[p++] = 0;
        if (p == slots.size()) break;
      }
      // next type vector
      int p = 0;
      while (p < d && ++type[p] == static_cast<int>(vs.size())) type[p++] = 0;
      if (p == d) break;
    }
  }
  return out;
}

// --- equivalence of nilpotent A-modules and R-modules ------------------

struct EquivalenceReport {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::string detail;

  void record(const std::string& name, bool ok, std::string why = "") {
    checks.emplace_back(name, ok);
    if (!ok && pass) {
      pass = false;
      detail = why.empty() ? name : name + ": " + why;
    }
  }
};

// R as a right module over itself.
template <class K>
FDModule<K> regular_module(const FinAlgebra<K>& R) {
  FDModule<K> m;
  m.alg = &R;
  m.d = static_cast<int>(R.dim());
  m.act.assign(R.dim(), Matrix<K>(m.d, m.d));
  for (std::size_t b = 0; b < R.dim(); ++b)
    for (std::size_t j = 0; j < R.dim(); ++j)
      for (std::size_t k = 0; k < R.dim(); ++k) m.act[b](k, j) = R.mult[j][b][k];
  return m;
}

// Ext^1(E_i^(n), S_j) -> Ext^1(E_i^(n+1), S_j) pullback along the
// tower projection is zero: lift the projection to a chain map and
// check every cocycle pulls back to a coboundary.
template <class K>
bool ext_pullback_vanishes(const QuotientAlgebra<K>& A, const FDModule<K>& Elo,
                           const FDModule<K>& Ehi, const Matrix<K>& proj) {
  Resolution<K> rlo = projective_resolution(A, Elo, 1);
  Resolution<K> rhi = projective_resolution(A, Ehi, 1);
  // F0 with values in P0 such that aug F0 = proj aug'. Solve in
  // Hom(P0', P0) coordinates.
  detail::HomProj<K> h00(rhi.P[0], rlo.P[0].mod);
  Matrix<K> sys(rhi.P[0].mod.d * Elo.d, h00.dim);
  std::vector<K> rhs(rhi.P[0].mod.d * Elo.d);
  for (int c = 0; c < h00.dim; ++c) {
    std::vector<K> e(h00.dim, K(0));
    e[c] = K(1);
    Matrix<K> m = rlo.aug * h00.to_map(e);
    for (int i = 0; i < Elo.d; ++i)
      for (int j = 0; j < rhi.P[0].mod.d; ++j) sys(i * rhi.P[0].mod.d + j, c) = m(i, j);
  }
  {
    Matrix<K> want = proj * rhi.aug;
    for (int i = 0; i < Elo.d; ++i)
      for (int j = 0; j < rhi.P[0].mod.d; ++j) rhs[i * rhi.P[0].mod.d + j] = want(i, j);
  }
  auto x0 = sys.solve(rhs);
  if (!x0) throw std::logic_error("chain lift F0 failed");
  Matrix<K> F0 = h00.to_map(*x0);
  // F1 : P1' -> P1 with d1 F1 = F0 d1'
  detail::HomProj<K> h11(rhi.P[1], rlo.P[1].mod);
  Matrix<K> sys1(rhi.P[1].mod.d * rlo.P[0].mod.d, h11.dim);
  std::vector<K> rhs1(rhi.P[1].mod.d * rlo.P[0].mod.d);
  for (int c = 0; c < h11.dim; ++c) {
    std::vector<K> e(h11.dim, K(0));
    e[c] = K(1);
    Matrix<K> m = rlo.d[0] * h11.to_map(e);
    for (int i = 0; i < rlo.P[0].mod.d; ++i)
      for (int j = 0; j < rhi.P[1].mod.d; ++j) sys1(i * rhi.P[1].mod.d + j, c) = m(i, j);
  }
  {
    Matrix<K> want = F0 * rhi.d[0];
    for (int i = 0; i < rlo.P[0].mod.d; ++i)
      for (int j = 0; j < rhi.P[1].mod.d; ++j) rhs1[i * rhi.P[1].mod.d + j] = want(i, j);
  }
  auto x1 = sys1.solve(rhs1);
  if (!x1) throw std::logic_error("chain lift F1 failed");
  Matrix<K> F1 = h11.to_map(*x1);
  // every cocycle c : P1 -> S_j pulls back to c F1; is it psi d1'?
  for (std::size_t t = 0; t < A.algebra().idempotents.size(); ++t) {
    FDModule<K> S = vertex_simple_module(A.algebra(), static_cast<int>(t));
    auto [dim, cocycles] = detail::ext1_from_resolution(rlo, S);
    for (const auto& c : cocycles) {
      Matrix<K> pulled = c * F1;  // P1' -> S
      detail::HomProj<K> h0p(rhi.P[0], S);
      Matrix<K> sysb(S.d * rhi.P[1].mod.d, h0p.dim);
      std::vector<K> rhsb(S.d * rhi.P[1].mod.d);
      for (int cc = 0; cc < h0p.dim; ++cc) {
        std::vector<K> e(h0p.dim, K(0));
        e[cc] = K(1);
        Matrix<K> m = h0p.to_map(e) * rhi.d[0];
        for (int i = 0; i < S.d; ++i)
          for (int j = 0; j < rhi.P[1].mod.d; ++j) sysb(i * rhi.P[1].mod.d + j, cc) = m(i, j);
      }
      for (int i = 0; i < S.d; ++i)
        for (int j = 0; j < rhi.P[1].mod.d; ++j) rhsb[i * rhi.P[1].mod.d + j] = pulled(i, j);
      if (!sysb.solve(rhsb)) return false;
    }
  }
  return true;
}

// The equivalence between nilpotent modules over the ambient algebra
// and modules over R = R^(n): exhaustive over a finite field up to
// dim_bound.
template <class K>
EquivalenceReport check_equivalence(const QuotientAlgebra<K>& ambient, const NcTower<K>& tower,
                                    int level, int dim_bound) {
  EquivalenceReport rep;
  const TowerLevel<K>& lvl = tower.levels[level];
  std::size_t r = lvl.R.idempotents.size();

  // Hom(E_i, S_j) = delta_ij
  {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        FDModule<K> S = vertex_simple_module(ambient.algebra(), static_cast<int>(j));
        std::size_t h = module_hom_space(lvl.Ei[i], S).size();
        if (h != (i == j ? 1u : 0u)) ok = false;
      }
    rep.record("Hom(E_i, S_j) = delta_ij", ok);
  }

  // Ext pullback along the tower vanishes
  if (level + 1 < static_cast<int>(tower.levels.size())) {
    const TowerLevel<K>& up = tower.levels[level + 1];
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      ok = ext_pullback_vanishes(ambient, lvl.Ei[i], up.Ei[i], up.proj_i[i]);
    rep.record("Ext^1(E_i, S_j) pullback vanishes one level up", ok);
  }

  // Phi(R) = E
  {
    auto phi = functor_phi(lvl, ambient, regular_module(lvl.R));
    rep.record("Phi(R) isomorphic to E", modules_isomorphic(phi.mod, lvl.E));
  }

  // simples match under both functors
  {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      FDModule<K> SA = vertex_simple_module(ambient.algebra(), static_cast<int>(i));
      FDModule<K> SR = vertex_simple_module(lvl.R, static_cast<int>(i));
      auto phi = functor_phi(lvl, ambient, SR);
      if (!modules_isomorphic(phi.mod, SA)) ok = false;
      FDModule<K> psi = functor_psi(lvl, SA);
      if (!modules_isomorphic(psi, SR)) ok = false;
    }
    rep.record("Phi and Psi exchange the simples", ok);
  }

  if constexpr (field_traits<K>::finite) {
    auto mods = enumerate_nilpotent_modules(ambient, dim_bound);
    // depth sufficiency: dim Hom(E^(n), U) no longer changes going up
    {
      bool ok = level + 1 < static_cast<int>(tower.levels.size());
      for (const auto& U : mods) {
        if (!ok) break;
        std::size_t here = module_hom_space(lvl.E, U).size();
        std::size_t up = module_hom_space(tower.levels[level + 1].E, U).size();
        if (here != up) ok = false;
      }
      rep.record("Hom(E^(n), U) depth-stable", ok);
    }
    // Phi(Psi(U)) = U, and full faithfulness on Hom dimensions
    {
      bool ok = true;
      std::vector<FDModule<K>> psis;
      for (const auto& U : mods) {
        FDModule<K> T = functor_psi(lvl, U);
        auto back = functor_phi(lvl, ambient, T);
        if (!modules_isomorphic(back.mod, U)) {
          ok = false;
          break;
        }
        psis.push_back(std::move(T));
      }
      rep.record("Phi(Psi(U)) isomorphic to U", ok);
      bool ff = ok;
      std::size_t limit = std::min<std::size_t>(mods.size(), 12);
      for (std::size_t a = 0; a < limit && ff; ++a)
        for (std::size_t b = 0; b < limit && ff; ++b)
          if (module_hom_space(mods[a], mods[b]).size() !=
              module_hom_space(psis[a], psis[b]).size())
            ff = false;
      rep.record("dim Hom preserved by Psi", ff);
    }
    // exactness of Psi on radical sequences 0 -> U.m -> U -> U/U.m -> 0
    {
      bool ok = true;
      for (const auto& U : mods) {
        if (!ok) break;
        if (U.d < 2) continue;
        std::vector<std::vector<K>> rad_cols;
        for (std::size_t b = 0; b < ambient.dim(); ++b) {
          if (ambient.algebra().degree[b] == 0) continue;
          for (int j = 0; j < U.d; ++j) {
            std::vector<K> c(U.d);
            for (int i = 0; i < U.d; ++i) c[i] = U.act[b](i, j);
            rad_cols.push_back(std::move(c));
          }
        }
        auto W = submodule_from_span(U, rad_cols);
        if (W.mod.d == 0 || W.mod.d == U.d) continue;
        std::vector<std::vector<K>> wspan;
        for (std::size_t c = 0; c < W.incl.cols(); ++c) {
          std::vector<K> v(U.d);
          for (int i = 0; i < U.d; ++i) v[i] = W.incl(i, c);
          wspan.push_back(std::move(v));
        }
        auto Qm = quotient_module(U, wspan);
        std::size_t dW = module_hom_space(lvl.E, W.mod).size();
        std::size_t dU = module_hom_space(lvl.E, U).size();
        std::size_t dQ = module_hom_space(lvl.E, Qm.mod).size();
        if (dW + dQ != dU) ok = false;
      }
      rep.record("Psi exact on radical sequences", ok);
    }
  }
  return rep;
}

}  // namespace eql

#endif




