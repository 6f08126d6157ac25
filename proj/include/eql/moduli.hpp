#ifndef EQL_MODULI_HPP
#define EQL_MODULI_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eql/potential.hpp"
#include "eql/series.hpp"

// Representation-variety bookkeeping: relation membership, nilpotency,
// Jordan-Hoelder data, slope stability, S-equivalence and wall-crossing
// comparison.  Stability decisions are complete over finite base fields
// (exhaustive invariant-subspace enumeration); over the rationals they
// are complete only when every vertex dimension is at most one, and
// "semi-decided" otherwise: a destabilizer found is always a valid
// certificate, its absence is not a proof.

namespace eql {

// Central charge with strictly positive imaginary parts, so every
// nonzero dimension vector has a finite slope.
struct StabilityParameter {
  std::map<int, GaussRat> Z;

  StabilityParameter() = default;
  explicit StabilityParameter(std::map<int, GaussRat> z) : Z(std::move(z)) {
    for (const auto& [v, c] : Z)
      if (!(c.im > 0))
        throw std::invalid_argument("central charge needs Im Z > 0 at vertex " +
                                    std::to_string(v));
  }

  GaussRat charge(const DimVector& dim) const {
    GaussRat out(0);
    for (const auto& [v, m] : dim.entries()) out += GaussRat(Rat(m)) * Z.at(v);
    return out;
  }
};

// mu = -Re Z(m) / Im Z(m); rejects the zero dimension vector.
inline Rat slope(const StabilityParameter& param, const DimVector& dim) {
  if (dim.is_zero()) throw std::invalid_argument("slope of the zero dimension vector");
  GaussRat z = param.charge(dim);
  return -z.re / z.im;
}

// Subspace family W_v <= V_v, stored as column-span matrices in the
// coordinates of the ambient representation.
template <class K>
struct SubRep {
  std::map<int, Matrix<K>> basis;  // vertex -> (m_v x k_v) column basis
  std::map<int, int> dims() const {
    std::map<int, int> d;
    for (const auto& [v, b] : basis) d[v] = static_cast<int>(b.cols());
    return d;
  }
  int total() const {
    int t = 0;
    for (const auto& [v, b] : basis) t += static_cast<int>(b.cols());
    return t;
  }
};

template <class K>
DimVector sub_dim(const Quiver& q, const SubRep<K>& w) {
  return DimVector(q, w.dims());
}

template <class K>
bool satisfies_relations(const Representation<K>& rep, const RelationSet<K>& reln) {
  const Quiver& q = rep.quiver();
  for (const auto& f : reln.relations) {
    if (!f.endpoints()) throw std::invalid_argument("relation without declared endpoints");
    auto [a, b] = *f.endpoints();
    if (!evaluate_series(f, rep, a, b).is_zero()) return false;
  }
  return true;
}

// All evaluations of words longer than the total dimension vanish iff
// the span of word evaluations dies out; tracked per length on the
// total block matrix space.
template <class K>
bool is_nilpotent(const Representation<K>& rep) {
  const Quiver& q = rep.quiver();
  int total = rep.dim().total();
  if (total == 0) return true;
  std::map<int, int> offset;
  int off = 0;
  for (int v : q.vertices()) {
    offset[v] = off;
    off += rep.dim().at(v);
  }
  auto embed = [&](const Matrix<K>& m, int src, int tgt) {
    std::vector<K> flat(total * total, K(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        flat[(offset.at(tgt) + i) * total + offset.at(src) + j] = m(i, j);
    return flat;
  };
  // current = basis of the span of length-n evaluations, vectorized
  std::vector<std::vector<K>> current;
  for (const auto& e : q.edges())
    current.push_back(embed(rep.matrix(e.id), e.source, e.target));
  auto prune = [total](std::vector<std::vector<K>>& vs) {
    if (vs.empty()) return;
    Matrix<K> m = Matrix<K>::from_columns(total * total, vs);
    vs = m.image_basis();
  };
  prune(current);
  for (int len = 1; len <= total && !current.empty(); ++len) {
    std::vector<std::vector<K>> next;
    for (const auto& flat : current) {
      for (const auto& e : q.edges()) {
        // left-compose with u_e where blocks meet
        std::vector<K> out(total * total, K(0));
        bool nz = false;
        const Matrix<K>& u = rep.matrix(e.id);
        for (std::size_t i = 0; i < u.rows(); ++i)
          for (std::size_t k = 0; k < u.cols(); ++k) {
            if (u(i, k) == K(0)) continue;
            for (int j = 0; j < total; ++j) {
              const K& x = flat[(offset.at(e.source) + k) * total + j];
              if (x == K(0)) continue;
              out[(offset.at(e.target) + i) * total + j] += u(i, k) * x;
              nz = true;
            }
          }
        if (nz) next.push_back(std::move(out));
      }
    }
    prune(next);
    current = std::move(next);
  }
  return current.empty();
}

namespace detail {

// All k-dimensional subspaces of K^m for finite K, one reduced
// row-echelon representative each, returned as m x k column bases.
// Deterministic order: pivot columns lexicographic, then free entries.
template <class K>
std::vector<Matrix<K>> subspaces_exhaustive(int m, int k) {
  std::vector<Matrix<K>> out;
  if (k == 0) {
    out.emplace_back(m, 0);
    return out;
  }
  auto elems = field_traits<K>::elements();
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == k) {
      // free entries: row i, column c with c > piv[i] and c not a pivot
      std::vector<bool> is_piv(m, false);
      for (int p : piv) is_piv[p] = true;
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < k; ++i)
        for (int c = piv[i] + 1; c < m; ++c)
          if (!is_piv[c]) free_pos.push_back({i, c});
      std::vector<std::size_t> choice(free_pos.size(), 0);
      while (true) {
        Matrix<K> rows(k, m);
        for (int i = 0; i < k; ++i) rows(i, piv[i]) = K(1);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          rows(free_pos[t].first, free_pos[t].second) = elems[choice[t]];
        out.push_back(rows.transpose());
        int pos = static_cast<int>(free_pos.size()) - 1;
        while (pos >= 0 && choice[pos] + 1 == elems.size()) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
      }
      return;
    }
    for (int c = from; c <= m - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

// Generic subspace candidates: exhaustive over finite fields; over
// infinite fields only the trivial ones, flagging incompleteness when
// 0 < k < m.
template <class K>
std::vector<Matrix<K>> subspaces_of(int m, int k, bool* complete) {
  if constexpr (field_traits<K>::finite) {
    return subspaces_exhaustive<K>(m, k);
  } else {
    std::vector<Matrix<K>> out;
    if (k == 0) {
      out.emplace_back(m, 0);
    } else if (k == m) {
      out.push_back(Matrix<K>::identity(m));
    } else if (complete) {
      *complete = false;
    }
    return out;
  }
}

template <class K>
bool in_span(const Matrix<K>& basis, const std::vector<K>& v) {
  return basis.solve(v).has_value();
}

}  // namespace detail

template <class K>
bool is_invariant(const Representation<K>& rep, const SubRep<K>& w) {
  const Quiver& q = rep.quiver();
  for (const auto& e : q.edges()) {
    const Matrix<K>& ws = w.basis.at(e.source);
    const Matrix<K>& wt = w.basis.at(e.target);
    for (std::size_t j = 0; j < ws.cols(); ++j) {
      std::vector<K> col(ws.rows());
      for (std::size_t i = 0; i < ws.rows(); ++i) col[i] = ws(i, j);
      if (!detail::in_span(wt, rep.matrix(e.id).apply(col))) return false;
    }
  }
  return true;
}

namespace detail {

// Visit invariant subspace families in deterministic order.  Sets
// *complete = false when the candidate family cannot be enumerated
// exhaustively over the base field.
template <class K>
void for_each_invariant_subrep(const Representation<K>& rep, bool* complete,
                               const std::function<void(const SubRep<K>&)>& fn) {
  const Quiver& q = rep.quiver();
  std::vector<int> verts = q.vertices();
  std::vector<std::vector<Matrix<K>>> per_vertex;
  for (int v : verts) {
    int m = rep.dim().at(v);
    std::vector<Matrix<K>> all;
    for (int k = 0; k <= m; ++k) {
      auto some = subspaces_of<K>(m, k, complete);
      all.insert(all.end(), some.begin(), some.end());
    }
    per_vertex.push_back(std::move(all));
  }
  std::vector<std::size_t> choice(verts.size(), 0);
  while (true) {
    SubRep<K> w;
    for (std::size_t i = 0; i < verts.size(); ++i)
      w.basis.emplace(verts[i], per_vertex[i][choice[i]]);
    if (is_invariant(rep, w)) fn(w);
    int pos = static_cast<int>(verts.size()) - 1;
    while (pos >= 0 && choice[pos] + 1 == per_vertex[pos].size()) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
}

}  // namespace detail

template <class K>
struct DestabilizerResult {
  std::optional<SubRep<K>> destabilizer;
  bool complete = true;  // search covered every subrepresentation
};

// Proper nonzero invariant family of slope strictly above slope(V).
// Tie-break for determinism: maximal slope, then minimal total
// dimension, then enumeration order.
template <class K>
DestabilizerResult<K> find_destabilizer(const StabilityParameter& param,
                                        const Representation<K>& rep) {
  const Quiver& q = rep.quiver();
  Rat mu = slope(param, rep.dim());
  DestabilizerResult<K> out;
  std::optional<Rat> best_slope;
  int best_total = 0;
  detail::for_each_invariant_subrep<K>(rep, &out.complete, [&](const SubRep<K>& w) {
    int t = w.total();
    if (t == 0 || t == rep.dim().total()) return;
    Rat s = slope(param, sub_dim(q, w));
    if (s <= mu) return;
    if (!best_slope || s > *best_slope || (s == *best_slope && t < best_total)) {
      best_slope = s;
      best_total = t;
      out.destabilizer = w;
    }
  });
  return out;
}

template <class K>
struct StabilityVerdict {
  bool semistable = false;                    // meaningful when decided
  bool decided = true;                        // false: semi-decided (no certificate found)
  std::optional<SubRep<K>> destabilizer;      // certificate when not semistable
  std::string note;
};

template <class K>
StabilityVerdict<K> is_semistable(const StabilityParameter& param, const Representation<K>& rep) {
  if (rep.dim().is_zero()) throw std::invalid_argument("stability of the zero representation");
  auto r = find_destabilizer(param, rep);
  StabilityVerdict<K> v;
  if (r.destabilizer) {
    v.semistable = false;
    v.decided = true;
    v.destabilizer = std::move(r.destabilizer);
    v.note = "destabilizer certificate";
  } else if (r.complete) {
    v.semistable = true;
    v.decided = true;
    v.note = "exhaustive enumeration";
  } else {
    v.decided = false;
    v.note = "semi-decided: candidate family incomplete over this field";
  }
  return v;
}

namespace detail {

// Span-union of two column families.
template <class K>
Matrix<K> span_join(const Matrix<K>& a, const Matrix<K>& b) {
  std::vector<std::vector<K>> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<K> c(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a(i, j);
    cols.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<K> c(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) c[i] = b(i, j);
    cols.push_back(std::move(c));
  }
  Matrix<K> m = Matrix<K>::from_columns(a.rows(), cols);
  return Matrix<K>::from_columns(a.rows(), m.image_basis());
}

template <class K>
bool contains(const Matrix<K>& big, const Matrix<K>& small) {
  for (std::size_t j = 0; j < small.cols(); ++j) {
    std::vector<K> c(small.rows());
    for (std::size_t i = 0; i < small.rows(); ++i) c[i] = small(i, j);
    if (!in_span(big, c)) return false;
  }
  return true;
}

template <class K>
bool family_contains(const SubRep<K>& big, const SubRep<K>& small) {
  for (const auto& [v, b] : small.basis)
    if (!contains(big.basis.at(v), b)) return false;
  return true;
}

// The factor W/F as a representation: extend the columns of F_v by
// columns of W_v to a basis of W_v, and read off the induced action on
// the complement coordinates.
template <class K>
Representation<K> quotient_factor(const Representation<K>& rep, const SubRep<K>& F,
                                  const SubRep<K>& W) {
  const Quiver& q = rep.quiver();
  std::map<int, Matrix<K>> full;   // [F | C] columns spanning W
  std::map<int, int> fdim, ddim;   // dim F, dim W/F per vertex
  for (int v : q.vertices()) {
    const Matrix<K>& f = F.basis.at(v);
    const Matrix<K>& w = W.basis.at(v);
    std::vector<std::vector<K>> cols;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      std::vector<K> c(f.rows());
      for (std::size_t i = 0; i < f.rows(); ++i) c[i] = f(i, j);
      cols.push_back(std::move(c));
    }
    std::size_t base = cols.size();
    for (std::size_t j = 0; j < w.cols(); ++j) {
      std::vector<K> c(w.rows());
      for (std::size_t i = 0; i < w.rows(); ++i) c[i] = w(i, j);
      cols.push_back(std::move(c));
      if (Matrix<K>::from_columns(f.rows(), cols).rank() < cols.size()) cols.pop_back();
    }
    fdim[v] = static_cast<int>(base);
    ddim[v] = static_cast<int>(cols.size() - base);
    full.emplace(v, Matrix<K>::from_columns(f.rows(), cols));
  }
  std::map<int, Matrix<K>> mats;
  for (const auto& e : q.edges()) {
    Matrix<K> m(ddim[e.target], ddim[e.source]);
    const Matrix<K>& bs = full.at(e.source);
    const Matrix<K>& bt = full.at(e.target);
    for (int j = 0; j < ddim[e.source]; ++j) {
      std::vector<K> c(bs.rows());
      for (std::size_t i = 0; i < bs.rows(); ++i) c[i] = bs(i, fdim[e.source] + j);
      auto coords = bt.solve(rep.matrix(e.id).apply(c));
      if (!coords) throw std::logic_error("factor is not invariant");
      for (int i = 0; i < ddim[e.target]; ++i) m(i, j) = (*coords)[fdim[e.target] + i];
    }
    mats.emplace(e.id, std::move(m));
  }
  return Representation<K>(rep.quiver_ptr(), DimVector(q, ddim), std::move(mats));
}

}  // namespace detail

// Ascending chain 0 = F_0 < ... < F_k = V with the recorded factors.
template <class K>
struct JHFiltration {
  std::vector<SubRep<K>> steps;               // F_1 .. F_k = V
  std::vector<Representation<K>> factors;     // F_i / F_{i-1}
  bool factors_stable_equal_slope = false;    // set by the slope-aware builder
};

namespace detail {

template <class K>
SubRep<K> zero_family(const Representation<K>& rep) {
  SubRep<K> f;
  for (int v : rep.quiver().vertices()) f.basis.emplace(v, Matrix<K>(rep.dim().at(v), 0));
  return f;
}

template <class K>
SubRep<K> full_family(const Representation<K>& rep) {
  SubRep<K> f;
  for (int v : rep.quiver().vertices())
    f.basis.emplace(v, Matrix<K>::identity(rep.dim().at(v)));
  return f;
}

// Next step of a JH chain: minimal invariant family strictly above F,
// optionally constrained to slope(W) == mu.
template <class K>
std::optional<SubRep<K>> minimal_extension(const Representation<K>& rep, const SubRep<K>& F,
                                           const StabilityParameter* param,
                                           const Rat* mu) {
  std::optional<SubRep<K>> best;
  int best_total = 0;
  int ftot = F.total();
  bool complete = true;
  detail::for_each_invariant_subrep<K>(rep, &complete, [&](const SubRep<K>& w) {
    int t = w.total();
    if (t <= ftot) return;
    if (!family_contains(w, F)) return;
    if (param && slope(*param, sub_dim(rep.quiver(), w)) != *mu) return;
    if (!best || t < best_total) {
      best = w;
      best_total = t;
    }
  });
  if (!complete) throw std::runtime_error("JH filtration needs a finite base field");
  return best;
}

}  // namespace detail

// Plain JH filtration in the category of representations: each factor
// simple.  Needs a finite base field (exhaustive subspace search).
template <class K>
JHFiltration<K> jh_filtration(const Representation<K>& rep) {
  JHFiltration<K> out;
  SubRep<K> F = detail::zero_family(rep);
  while (F.total() < rep.dim().total()) {
    auto W = detail::minimal_extension<K>(rep, F, nullptr, nullptr);
    if (!W) throw std::logic_error("no extension found");
    out.factors.push_back(detail::quotient_factor(rep, F, *W));
    out.steps.push_back(*W);
    F = *W;
  }
  return out;
}

// JH filtration inside the semistable-of-slope-mu subcategory: every
// step has slope exactly mu, so every factor is stable of slope mu.
// Precondition: rep is semistable for param.
template <class K>
JHFiltration<K> slope_jh_filtration(const StabilityParameter& param,
                                    const Representation<K>& rep) {
  Rat mu = slope(param, rep.dim());
  JHFiltration<K> out;
  out.factors_stable_equal_slope = true;
  SubRep<K> F = detail::zero_family(rep);
  while (F.total() < rep.dim().total()) {
    auto W = detail::minimal_extension<K>(rep, F, &param, &mu);
    if (!W) throw std::invalid_argument("representation is not semistable at this parameter");
    out.factors.push_back(detail::quotient_factor(rep, F, *W));
    out.steps.push_back(*W);
    F = *W;
  }
  return out;
}

// Intertwiner space Hom(rep1, rep2): families phi_v with
// phi_{t(e)} u_e = u'_e phi_{s(e)}, returned as a basis of block
// families.
template <class K>
std::vector<std::map<int, Matrix<K>>> hom_space(const Representation<K>& a,
                                                const Representation<K>& b) {
  const Quiver& q = a.quiver();
  // unknowns: entries of phi_v, stacked per vertex
  std::map<int, int> off;
  int nvars = 0;
  for (int v : q.vertices()) {
    off[v] = nvars;
    nvars += a.dim().at(v) * b.dim().at(v);
  }
  std::vector<std::vector<K>> eqs;
  for (const auto& e : q.edges()) {
    int ms = a.dim().at(e.source), mt = a.dim().at(e.target);
    int ns = b.dim().at(e.source), nt = b.dim().at(e.target);
    const Matrix<K>& u = a.matrix(e.id);
    const Matrix<K>& u2 = b.matrix(e.id);
    // equation (i, j): sum_k phi_t(i, k) u(k, j) - sum_k u2(i, k) phi_s(k, j) = 0
    for (int i = 0; i < nt; ++i)
      for (int j = 0; j < ms; ++j) {
        std::vector<K> row(nvars, K(0));
        for (int k = 0; k < mt; ++k)
          row[off[e.target] + i * mt + k] += u(k, j);
        for (int k = 0; k < ns; ++k)
          row[off[e.source] + k * ms + j] -= u2(i, k);
        eqs.push_back(std::move(row));
      }
  }
  Matrix<K> sys(eqs.size(), nvars);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < nvars; ++c) sys(r, c) = eqs[r][c];
  std::vector<std::map<int, Matrix<K>>> out;
  for (const auto& vec : sys.kernel_basis()) {
    std::map<int, Matrix<K>> phi;
    for (int v : q.vertices()) {
      Matrix<K> m(b.dim().at(v), a.dim().at(v));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vec[off[v] + i * m.cols() + j];
      phi.emplace(v, std::move(m));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

// Isomorphism test for simple (or stable equal-slope) representations:
// dimensions match and a nonzero intertwiner exists; by Schur it is
// then invertible, which is verified rather than assumed.
template <class K>
bool simple_isomorphic(const Representation<K>& a, const Representation<K>& b) {
  if (a.dim().entries() != b.dim().entries()) return false;
  for (const auto& phi : hom_space(a, b)) {
    bool ok = true;
    for (const auto& [v, m] : phi)
      if (m.rows() > 0 && !m.inverse()) ok = false;
    if (ok) return true;
  }
  return false;
}

// JH factors with multiplicity.  Over an infinite field only nilpotent
// representations are supported (the factors are then the vertex
// simples with multiplicity m_v); over a finite field the filtration is
// computed exhaustively.
template <class K>
std::vector<std::pair<Representation<K>, int>> semisimplify(const Representation<K>& rep) {
  std::vector<Representation<K>> factors;
  if constexpr (field_traits<K>::finite) {
    factors = jh_filtration(rep).factors;
  } else {
    if (!is_nilpotent(rep))
      throw std::invalid_argument(
          "semi-simplification over an infinite field needs a nilpotent representation");
    const Quiver& q = rep.quiver();
    for (int v : q.vertices()) {
      std::map<int, int> d;
      for (int w : q.vertices()) d[w] = (w == v) ? 1 : 0;
      Representation<K> s(rep.quiver_ptr(), DimVector(q, d), {});
      for (int c = 0; c < rep.dim().at(v); ++c) factors.push_back(s);
    }
  }
  std::vector<std::pair<Representation<K>, int>> out;
  for (auto& f : factors) {
    if (f.dim().is_zero()) continue;
    bool found = false;
    for (auto& [g, mult] : out)
      if (simple_isomorphic(f, g)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.push_back({std::move(f), 1});
  }
  return out;
}

// ---- enumeration over a finite field ----

// All representations of the quiver with the given dimension vector, in
// a fixed deterministic order (entries little-endian over the field
// element order, edges in id order).
template <class K>
std::vector<Representation<K>> enumerate_representations(const Quiver* q, const DimVector& dim,
                                                         std::size_t refuse_above = (1u << 22)) {
  static_assert(field_traits<K>::finite, "representation enumeration needs a finite field");
  auto elems = field_traits<K>::elements();
  std::size_t entries = 0;
  for (const auto& e : q->edges())
    entries += static_cast<std::size_t>(dim.at(e.target)) * dim.at(e.source);
  double count = 1;
  for (std::size_t i = 0; i < entries; ++i) count *= elems.size();
  if (count > static_cast<double>(refuse_above))
    throw std::runtime_error("enumeration infeasible: about " + std::to_string(count) +
                             " representations (" + std::to_string(elems.size()) + "^" +
                             std::to_string(entries) + ")");
  std::vector<Representation<K>> out;
  std::vector<std::size_t> choice(entries, 0);
  while (true) {
    std::map<int, Matrix<K>> mats;
    std::size_t t = 0;
    for (const auto& e : q->edges()) {
      Matrix<K> m(dim.at(e.target), dim.at(e.source));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = elems[choice[t++]];
      mats.emplace(e.id, std::move(m));
    }
    out.emplace_back(q, dim, std::move(mats));
    int pos = static_cast<int>(entries) - 1;
    while (pos >= 0 && choice[pos] + 1 == elems.size()) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
  return out;
}

// One S-equivalence class: indices into the enumerated semistable list
// plus the multiset signature of stable JH factors (ids into a factor
// registry built on the fly).
template <class K>
struct SEquivalenceReport {
  std::vector<Representation<K>> semistable;       // the sigma-semistable reps
  std::vector<std::vector<std::size_t>> classes;   // partition of indices into `semistable`
  std::vector<Representation<K>> factor_registry;  // stable factors, one per iso class
  std::vector<std::vector<int>> signatures;        // sorted factor ids per class
};

template <class K>
SEquivalenceReport<K> s_equivalence_classes(const Quiver* q, const RelationSet<K>& reln,
                                            const DimVector& dim,
                                            const StabilityParameter& param) {
  SEquivalenceReport<K> out;
  std::vector<std::vector<int>> sigs;
  for (auto& rep : enumerate_representations<K>(q, dim)) {
    if (!satisfies_relations(rep, reln)) continue;
    if (is_semistable(param, rep).semistable == false) continue;
    auto jh = slope_jh_filtration(param, rep);
    std::vector<int> sig;
    for (const auto& f : jh.factors) {
      int id = -1;
      for (std::size_t i = 0; i < out.factor_registry.size(); ++i)
        if (simple_isomorphic(f, out.factor_registry[i])) {
          id = static_cast<int>(i);
          break;
        }
      if (id < 0) {
        id = static_cast<int>(out.factor_registry.size());
        out.factor_registry.push_back(f);
      }
      sig.push_back(id);
    }
    std::sort(sig.begin(), sig.end());
    std::size_t idx = out.semistable.size();
    out.semistable.push_back(std::move(rep));
    bool placed = false;
    for (std::size_t c = 0; c < sigs.size(); ++c)
      if (sigs[c] == sig) {
        out.classes[c].push_back(idx);
        placed = true;
        break;
      }
    if (!placed) {
      sigs.push_back(sig);
      out.classes.push_back({idx});
    }
  }
  out.signatures = std::move(sigs);
  return out;
}

// Wall-crossing comparison: every sigma-plus-semistable representation
// must remain sigma-semistable; the fibering maps each sigma-plus class
// to the sigma class of its members.  A violation reports the wall
// equation Im(Z(m') conj(Z(m))) = 0 for the offending sub-dimension
// vector m'.
template <class K>
struct WallcrossReport {
  bool wall_detected = false;
  std::string wall_equation;
  std::map<int, int> offending_subdim;
  // fiber over each sigma class: the sigma-plus classes mapping to it
  std::vector<std::vector<std::size_t>> fibers;
  std::size_t sigma_classes = 0;
  std::size_t sigma_plus_classes = 0;
};

template <class K>
WallcrossReport<K> wallcross_compare(const Quiver* q, const RelationSet<K>& reln,
                                     const DimVector& dim, const StabilityParameter& sigma,
                                     const StabilityParameter& sigma_plus) {
  WallcrossReport<K> out;
  auto reps = enumerate_representations<K>(q, dim);
  std::vector<const Representation<K>*> kept;
  for (const auto& r : reps)
    if (satisfies_relations(r, reln)) kept.push_back(&r);

  // sigma-plus-semistable must be sigma-semistable
  for (const auto* r : kept) {
    if (!is_semistable(sigma_plus, *r).semistable) continue;
    auto v = is_semistable(sigma, *r);
    if (!v.semistable) {
      out.wall_detected = true;
      auto sd = sub_dim(*q, *v.destabilizer);
      out.offending_subdim = sd.entries();
      GaussRat zm = sigma.charge(dim);
      GaussRat zs = sigma.charge(sd);
      std::string mprime, mfull;
      for (const auto& [vx, m] : sd.entries()) mprime += std::to_string(m) + " ";
      for (const auto& [vx, m] : dim.entries()) mfull += std::to_string(m) + " ";
      out.wall_equation = "Im(Z(m') conj(Z(m))) = 0 with m' = (" + mprime + "), m = (" + mfull +
                          "); at sigma the value is " + rat_str((zs * conj(zm)).im);
      return out;
    }
  }

  auto at_sigma = s_equivalence_classes<K>(q, reln, dim, sigma);
  auto at_plus = s_equivalence_classes<K>(q, reln, dim, sigma_plus);
  out.sigma_classes = at_sigma.classes.size();
  out.sigma_plus_classes = at_plus.classes.size();
  out.fibers.assign(at_sigma.classes.size(), {});

  // locate the sigma class of one member of each sigma-plus class
  auto sigma_class_of = [&](const Representation<K>& rep) -> int {
    auto jh = slope_jh_filtration(sigma, rep);
    std::vector<int> sig;
    for (const auto& f : jh.factors) {
      int id = -1;
      for (std::size_t i = 0; i < at_sigma.factor_registry.size(); ++i)
        if (simple_isomorphic(f, at_sigma.factor_registry[i])) {
          id = static_cast<int>(i);
          break;
        }
      if (id < 0) return -1;
      sig.push_back(id);
    }
    std::sort(sig.begin(), sig.end());
    for (std::size_t c = 0; c < at_sigma.signatures.size(); ++c)
      if (at_sigma.signatures[c] == sig) return static_cast<int>(c);
    return -1;
  };
  for (std::size_t pc = 0; pc < at_plus.classes.size(); ++pc) {
    const auto& rep = at_plus.semistable[at_plus.classes[pc][0]];
    int sc = sigma_class_of(rep);
    if (sc < 0) throw std::logic_error("sigma-plus class has no sigma class");
    out.fibers[sc].push_back(pc);
  }
  return out;
}

}  // namespace eql

#endif
