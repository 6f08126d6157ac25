#ifndef EQL_POTENTIAL_HPP
#define EQL_POTENTIAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eql/ainfinity.hpp"
#include "eql/series.hpp"

namespace eql {

// Ext-quiver of a minimal A-infinity structure on a multi-vertex graded
// space: one vertex per block label, one edge per degree-1 basis
// element.  The edge with id equal to the basis index stands for the
// dual-basis vector e; the basis element itself plays the role of e
// dual in Ext^1.
template <class K>
class ExtQuiverPresentation {
 public:
  explicit ExtQuiverPresentation(const AInfinityStructure<K>& ainf) : ainf_(&ainf) {
    std::vector<int> vertices;
    for (const auto& g : ainf.h_basis) {
      vertices.push_back(g.src);
      vertices.push_back(g.tgt);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<Quiver::Edge> edges;
    for (std::size_t i = 0; i < ainf.h_basis.size(); ++i) {
      const auto& g = ainf.h_basis[i];
      if (g.degree == 1)
        edges.push_back({static_cast<int>(i), g.src, g.tgt});
    }
    quiver_ = std::make_shared<Quiver>(std::move(vertices), std::move(edges));
  }

  const Quiver& quiver() const { return *quiver_; }
  const Quiver* quiver_ptr() const { return quiver_.get(); }
  const AInfinityStructure<K>& ainf() const { return *ainf_; }

  // H basis index of the degree-1 element attached to an edge.
  int basis_of_edge(int edge_id) const { return edge_id; }

  std::vector<int> degree2_basis() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ainf_->h_basis.size(); ++i)
      if (ainf_->h_basis[i].degree == 2) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  const AInfinityStructure<K>* ainf_;
  std::shared_ptr<Quiver> quiver_;
};

// Bilinear pairing on the graded space, of total degree -d (d = 3 in
// the CY3 case): nonzero only between degrees j and d - j.
template <class K>
struct CyclicPairing {
  Matrix<K> gram;  // gram(i, j) = (b_i, b_j)
  int total_degree = 3;

  K pair(const std::vector<K>& x, const std::vector<K>& y) const {
    K out(0);
    for (std::size_t i = 0; i < gram.rows(); ++i) {
      if (x[i] == K(0)) continue;
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (gram(i, j) != K(0) && y[j] != K(0)) out += x[i] * gram(i, j) * y[j];
    }
    return out;
  }
  K pair_basis(const std::vector<K>& x, int j) const {
    K out(0);
    for (std::size_t i = 0; i < gram.rows(); ++i)
      if (x[i] != K(0) && gram(i, j) != K(0)) out += x[i] * gram(i, j);
    return out;
  }
};

// Relation series f_1..f_l with their labels and provenance.
template <class K>
struct RelationSet {
  enum class Provenance { FromProducts, FromPotential };
  std::vector<PathSeries<K>> relations;
  std::vector<std::string> labels;
  Provenance provenance = Provenance::FromProducts;
};

namespace detail {

// All composable cyclic-structure words of the Ext quiver of a given
// length, as edge-id sequences (not reduced modulo rotation).
template <class K>
void for_each_word(const ExtQuiverPresentation<K>& pres, int len,
                   const std::function<void(const std::vector<int>&)>& fn) {
  const Quiver& q = pres.quiver();
  std::vector<int> word;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == len) {
      fn(word);
      return;
    }
    if (depth == 0) {
      for (const auto& e : q.edges()) {
        word.push_back(e.id);
        rec(1);
        word.pop_back();
      }
    } else {
      int end = q.edge(word.back()).target;
      for (int eid : q.edges_from(end)) {
        word.push_back(eid);
        rec(depth + 1);
        word.pop_back();
      }
    }
  };
  rec(0);
}

}  // namespace detail

// f_i = m-dual of o_i: for each functional o on the degree-2 block, the
// series sum over composable words of <o, m_n(e_1,...,e_n)> times the
// word, for 2 <= n <= N.  When a pairing is supplied the functionals
// are the pairing-duals of the edges, giving one relation per edge from
// t(e) to s(e); otherwise the coordinate duals of the degree-2 basis.
template <class K>
RelationSet<K> relations_from_products(const AInfinityStructure<K>& ainf,
                                       const ExtQuiverPresentation<K>& pres,
                                       const CyclicPairing<K>* pairing, int N) {
  RelationSet<K> out;
  out.provenance = RelationSet<K>::Provenance::FromProducts;
  const Quiver& q = pres.quiver();

  struct Functional {
    std::vector<K> weights;  // weight per degree-2 basis index
    std::string label;
    std::optional<std::pair<int, int>> endpoints;  // (source, target) of words it accepts
  };
  auto deg2 = pres.degree2_basis();
  std::vector<Functional> funcs;
  if (pairing) {
    for (const auto& e : q.edges()) {
      Functional f;
      f.label = "d/" + ainf.h_basis[pres.basis_of_edge(e.id)].name;
      f.weights.assign(deg2.size(), K(0));
      for (std::size_t k = 0; k < deg2.size(); ++k)
        f.weights[k] = pairing->gram(deg2[k], pres.basis_of_edge(e.id));
      f.endpoints = {{e.target, e.source}};
      funcs.push_back(std::move(f));
    }
  } else {
    for (std::size_t k = 0; k < deg2.size(); ++k) {
      Functional f;
      f.label = ainf.h_basis[deg2[k]].name + "*";
      f.weights.assign(deg2.size(), K(0));
      f.weights[k] = K(1);
      f.endpoints = {{ainf.h_basis[deg2[k]].src, ainf.h_basis[deg2[k]].tgt}};
      funcs.push_back(std::move(f));
    }
  }

  std::vector<PathSeries<K>> rel;
  for (const auto& f : funcs) rel.emplace_back(pres.quiver_ptr(), N, f.endpoints);

  for (int n = 2; n <= std::min(N, ainf.max_arity); ++n) {
    detail::for_each_word<K>(pres, n, [&](const std::vector<int>& word) {
      std::vector<int> tuple;
      for (int eid : word) tuple.push_back(pres.basis_of_edge(eid));
      auto col = ainf.m_column(n, tuple);
      for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
        K v(0);
        for (std::size_t k = 0; k < deg2.size(); ++k)
          if (funcs[fi].weights[k] != K(0)) v += funcs[fi].weights[k] * col[deg2[k]];
        if (v != K(0)) rel[fi].add(PathWord::of(word), v);
      }
    });
  }
  for (std::size_t fi = 0; fi < funcs.size(); ++fi) {
    out.relations.push_back(std::move(rel[fi]));
    out.labels.push_back(funcs[fi].label);
  }
  return out;
}

// Rotation identity (m_{n-1}(a_1..a_{n-1}), a_n) = (m_{n-1}(a_2..a_n), a_1)
// on cyclically composable degree-1 basis tuples, for products up to
// arity N.
template <class K>
CheckReport check_cyclic(const AInfinityStructure<K>& ainf, const CyclicPairing<K>& pairing,
                         int N) {
  ExtQuiverPresentation<K> pres(ainf);
  const Quiver& q = pres.quiver();
  for (int n = 3; n <= N + 1; ++n) {
    CheckReport bad{true, ""};
    detail::for_each_word<K>(pres, n, [&](const std::vector<int>& word) {
      if (!bad.pass) return;
      if (q.edge(word.back()).target != q.edge(word.front()).source) return;  // not a cycle
      std::vector<int> head(word.begin(), word.end() - 1);
      std::vector<int> rot(word.begin() + 1, word.end());
      auto lhs_col = ainf.m_column(n - 1, head);
      auto rot_col = ainf.m_column(n - 1, rot);
      K lhs = pairing.pair_basis(lhs_col, word.back());
      K rhs = pairing.pair_basis(rot_col, word.front());
      if (lhs != rhs) {
        std::string t;
        for (int e : word) t += ainf.h_basis[e].name + " ";
        bad = {false, "cyclic identity fails on " + t};
      }
    });
    if (!bad.pass) return bad;
  }
  return {true, ""};
}

// Superpotential: series supported on cyclic words, stored in canonical
// cyclic normal form (lexicographically minimal rotation).
template <class K>
class SuperPotential {
 public:
  SuperPotential() = default;
  SuperPotential(const Quiver* q, int order) : series_(q, order) {}

  static std::vector<int> canonical_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    std::vector<int> cur = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  }

  // Adds the coefficient of one concrete cyclic word (not a class).
  void add_word(const std::vector<int>& word, const K& c) {
    series_.add(PathWord::of(canonical_rotation(word)), c);
  }

  const PathSeries<K>& series() const { return series_; }
  int order() const { return series_.order(); }
  bool is_zero() const { return series_.is_zero(); }

 private:
  PathSeries<K> series_;
};

// W with coefficient (1/n)(m_{n-1}(e_1,..,e_{n-1}), e_n) on each cyclic
// word e_1..e_n of length 3..N; refuses when the cyclicity check fails.
// Needs characteristic zero for the 1/n factor.
template <class K>
SuperPotential<K> build_potential(const AInfinityStructure<K>& ainf,
                                  const CyclicPairing<K>& pairing,
                                  const ExtQuiverPresentation<K>& pres, int N) {
  static_assert(field_traits<K>::characteristic == 0,
                "potential construction divides by word length");
  auto cyc = check_cyclic(ainf, pairing, std::min(N - 1, ainf.max_arity));
  if (!cyc.pass) throw std::runtime_error("pairing is not cyclic: " + cyc.detail);
  const Quiver& q = pres.quiver();
  SuperPotential<K> W(pres.quiver_ptr(), N);
  for (int n = 3; n <= N && n - 1 <= ainf.max_arity; ++n) {
    detail::for_each_word<K>(pres, n, [&](const std::vector<int>& word) {
      if (q.edge(word.back()).target != q.edge(word.front()).source) return;
      std::vector<int> head(word.begin(), word.end() - 1);
      std::vector<int> tuple;
      for (int eid : head) tuple.push_back(pres.basis_of_edge(eid));
      auto col = ainf.m_column(n - 1, tuple);
      K c = pairing.pair_basis(col, pres.basis_of_edge(word.back())) / K(n);
      if (c != K(0)) W.add_word(word, c);
    });
  }
  return W;
}

// Cyclic derivative: every occurrence of e in a stored word opens the
// cycle there, contributing the rotated remainder.
template <class K>
PathSeries<K> cyclic_derivative(const SuperPotential<K>& W, int edge_id) {
  const Quiver& q = W.series().quiver();
  PathSeries<K> out(W.series().quiver_ptr(), std::max(1, W.order() - 1));
  for (const auto& [w, c] : W.series().coefficients()) {
    for (std::size_t a = 0; a < w.edges.size(); ++a) {
      if (w.edges[a] != edge_id) continue;
      std::vector<int> rest(w.edges.begin() + a + 1, w.edges.end());
      rest.insert(rest.end(), w.edges.begin(), w.edges.begin() + a);
      if (rest.empty())
        out.add(PathWord::trivial(q.edge(edge_id).target), c);
      else
        out.add(PathWord::of(rest), c);
    }
  }
  return out;
}

// I = dW: the pairing-indexed relations equal the cyclic derivatives of
// the potential, word by word up to order N.
template <class K>
CheckReport verify_jacobian_identity(const AInfinityStructure<K>& ainf,
                                     const CyclicPairing<K>& pairing,
                                     const ExtQuiverPresentation<K>& pres, int N) {
  auto cyc = check_cyclic(ainf, pairing, std::min(N, ainf.max_arity));
  if (!cyc.pass) return cyc;
  auto reln = relations_from_products(ainf, pres, &pairing, N);
  auto W = build_potential(ainf, pairing, pres, N + 1);
  const Quiver& q = pres.quiver();
  for (std::size_t i = 0; i < q.edges().size(); ++i) {
    int eid = q.edges()[i].id;
    auto dW = cyclic_derivative(W, eid);
    const auto& f = reln.relations[i];
    for (const auto& [w, c] : f.coefficients()) {
      if (dW.coeff(w) != c)
        return {false, "relation/potential mismatch for edge " +
                           ainf.h_basis[pres.basis_of_edge(eid)].name + " at a word of length " +
                           std::to_string(w.length())};
    }
    for (const auto& [w, c] : dW.coefficients()) {
      if (static_cast<int>(w.length()) > N) continue;
      if (f.coeff(w) != c)
        return {false, "potential has extra word for edge " +
                           ainf.h_basis[pres.basis_of_edge(eid)].name};
    }
  }
  return {true, ""};
}

// Maurer-Cartan defect kappa(u) as a block matrix: for each degree-2
// basis index k with block (a, b), the Hom(V_a, V_b) component.
template <class K>
std::map<int, Matrix<K>> mc_defect(const AInfinityStructure<K>& ainf,
                                   const ExtQuiverPresentation<K>& pres,
                                   const Representation<K>& rep, int N) {
  auto deg2 = pres.degree2_basis();
  std::map<int, Matrix<K>> out;
  for (int k : deg2) {
    const auto& g = ainf.h_basis[k];
    out.emplace(k, Matrix<K>(rep.dim().at(g.tgt), rep.dim().at(g.src)));
  }
  for (int n = 2; n <= std::min(N, ainf.max_arity); ++n) {
    detail::for_each_word<K>(pres, n, [&](const std::vector<int>& word) {
      std::vector<int> tuple;
      for (int eid : word) tuple.push_back(pres.basis_of_edge(eid));
      auto col = ainf.m_column(n, tuple);
      bool any = false;
      for (int k : deg2)
        if (col[k] != K(0)) any = true;
      if (!any) return;
      auto mw = evaluate_word(PathWord::of(word), rep);
      for (int k : deg2)
        if (col[k] != K(0)) out.at(k) = out.at(k) + col[k] * mw;
    });
  }
  return out;
}

template <class K>
bool mc_defect_is_zero(const std::map<int, Matrix<K>>& kappa) {
  for (const auto& [k, m] : kappa)
    if (!m.is_zero()) return false;
  return true;
}

// tr W(u): sum over stored cyclic words of coefficient times the trace
// of the matrix word.
template <class K>
K trace_potential(const SuperPotential<K>& W, const Representation<K>& rep) {
  K out(0);
  for (const auto& [w, c] : W.series().coefficients())
    out += c * evaluate_word(w, rep).trace();
  return out;
}

// d(tr W)/d(u_e)_{pq} computed by the product rule, independently of
// cyclic_derivative and evaluate_series: differentiating tr(A u_e B)
// gives the (q,p) entry of B A.  Words longer than max_len are skipped
// so the comparison respects a common truncation.
template <class K>
Matrix<K> trace_gradient_entrywise(const SuperPotential<K>& W, const Representation<K>& rep,
                                   int edge_id, int max_len) {
  const Quiver& q = W.series().quiver();
  const auto& e = q.edge(edge_id);
  Matrix<K> grad(rep.dim().at(e.target), rep.dim().at(e.source));  // indexed (p, q)
  for (const auto& [w, c] : W.series().coefficients()) {
    if (static_cast<int>(w.length()) > max_len) continue;
    for (std::size_t a = 0; a < w.edges.size(); ++a) {
      if (w.edges[a] != edge_id) continue;
      // B = u_{e_{a-1}} ... u_{e_1}, A = u_{e_n} ... u_{e_{a+1}}
      Matrix<K> B = Matrix<K>::identity(rep.dim().at(e.source));
      for (std::size_t j = 0; j < a; ++j) B = rep.matrix(w.edges[j]) * B;
      Matrix<K> A = Matrix<K>::identity(rep.dim().at(e.target));
      for (std::size_t j = a + 1; j < w.edges.size(); ++j) A = rep.matrix(w.edges[j]) * A;
      Matrix<K> BA = B * A;
      for (std::size_t p = 0; p < grad.rows(); ++p)
        for (std::size_t qq = 0; qq < grad.cols(); ++qq) grad(p, qq) += c * BA(qq, p);
    }
  }
  return grad;
}

// Crit(tr W) = MC locus, entrywise: the symbolic gradient of tr W in
// the matrix entry (u_e)_{pq} must equal the (q, p) entry of the
// evaluated cyclic derivative, for every edge.  Comparison is capped at
// the common truncation (differentiation drops the length by one).
template <class K>
CheckReport crit_equals_mc(const SuperPotential<K>& W, const RelationSet<K>& reln,
                           const Representation<K>& rep) {
  const Quiver& q = W.series().quiver();
  if (rep.quiver_ptr() != W.series().quiver_ptr())
    return {false, "representation lives on a different quiver"};
  int cap = 1 + std::min(W.order() - 1, reln.relations.empty() ? W.order() - 1
                                                               : reln.relations[0].order());
  for (std::size_t i = 0; i < q.edges().size(); ++i) {
    const auto& e = q.edges()[i];
    auto grad = trace_gradient_entrywise(W, rep, e.id, cap);
    Matrix<K> ev = i < reln.relations.size()
                       ? evaluate_series(reln.relations[i], rep, e.target, e.source)
                       : Matrix<K>(rep.dim().at(e.source), rep.dim().at(e.target));
    for (std::size_t p = 0; p < grad.rows(); ++p)
      for (std::size_t qq = 0; qq < grad.cols(); ++qq)
        if (grad(p, qq) != ev(qq, p))
          return {false, "gradient mismatch on edge " + std::to_string(e.id) + " entry (" +
                             std::to_string(p) + "," + std::to_string(qq) + ")"};
  }
  return {true, ""};
}

}  // namespace eql

#endif
