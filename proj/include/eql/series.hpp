#ifndef EQL_SERIES_HPP
#define EQL_SERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>

#include "eql/matrix.hpp"
#include "eql/quiver.hpp"

namespace eql {

template <class K>
class Representation;

// Truncated element of the formal path algebra: a coefficient table on
// words of length <= order.  An optional (source, target) pair restricts
// the support; "mixed" series leave it unset.
template <class K>
class PathSeries {
 public:
  PathSeries() = default;
  PathSeries(const Quiver* q, int order) : quiver_(q), order_(order) {
    if (order < 1) throw std::invalid_argument("truncation order must be positive");
  }
  PathSeries(const Quiver* q, int order, std::optional<std::pair<int, int>> st)
      : quiver_(q), order_(order), st_(st) {
    if (order < 1) throw std::invalid_argument("truncation order must be positive");
  }

  const Quiver& quiver() const { return *quiver_; }
  const Quiver* quiver_ptr() const { return quiver_; }
  int order() const { return order_; }
  const std::optional<std::pair<int, int>>& endpoints() const { return st_; }
  const std::map<PathWord, K>& coefficients() const { return coeffs_; }

  void add(const PathWord& w, const K& c) {
    if (c == K(0)) return;
    if (static_cast<int>(w.length()) > order_) return;  // truncate
    if (!w.composable(*quiver_)) throw std::invalid_argument("word not composable");
    if (st_) {
      if (w.source(*quiver_) != st_->first || w.target(*quiver_) != st_->second)
        throw std::invalid_argument("word violates declared endpoints");
    }
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
      coeffs_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == K(0)) coeffs_.erase(it);
    }
  }

  K coeff(const PathWord& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? K(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  bool has_trivial_terms() const {
    for (const auto& [w, c] : coeffs_)
      if (w.length() == 0) return true;
    return false;
  }

  std::size_t min_word_length() const {
    std::size_t m = static_cast<std::size_t>(order_) + 1;
    for (const auto& [w, c] : coeffs_) m = std::min(m, w.length());
    return m;
  }

  friend PathSeries operator+(const PathSeries& f, const PathSeries& g) {
    if (f.quiver_ != g.quiver_) throw std::invalid_argument("quiver mismatch");
    PathSeries r(f.quiver_, std::min(f.order_, g.order_));
    for (const auto& [w, c] : f.coeffs_) r.add(w, c);
    for (const auto& [w, c] : g.coeffs_) r.add(w, c);
    return r;
  }

  friend PathSeries operator-(const PathSeries& f, const PathSeries& g) {
    if (f.quiver_ != g.quiver_) throw std::invalid_argument("quiver mismatch");
    PathSeries r(f.quiver_, std::min(f.order_, g.order_));
    for (const auto& [w, c] : f.coeffs_) r.add(w, c);
    for (const auto& [w, c] : g.coeffs_) r.add(w, -c);
    return r;
  }

  friend bool operator==(const PathSeries& f, const PathSeries& g) {
    return f.quiver_ == g.quiver_ && f.coeffs_ == g.coeffs_;
  }

 private:
  const Quiver* quiver_ = nullptr;
  int order_ = 1;
  std::optional<std::pair<int, int>> st_;
  std::map<PathWord, K> coeffs_;
};

// Product by composition of paths, truncated at the minimum of the two
// operand orders.
template <class K>
PathSeries<K> series_multiply(const PathSeries<K>& f, const PathSeries<K>& g) {
  if (f.quiver_ptr() != g.quiver_ptr()) throw std::invalid_argument("quiver mismatch");
  const Quiver& q = f.quiver();
  PathSeries<K> r(f.quiver_ptr(), std::min(f.order(), g.order()));
  for (const auto& [w1, c1] : f.coefficients()) {
    for (const auto& [w2, c2] : g.coefficients()) {
      if (static_cast<int>(w1.length() + w2.length()) > r.order()) continue;
      if (w1.target(q) != w2.source(q)) continue;
      PathWord w;
      if (w1.length() + w2.length() == 0) {
        w = PathWord::trivial(w1.trivial_vertex);
      } else {
        w.edges = w1.edges;
        w.edges.insert(w.edges.end(), w2.edges.begin(), w2.edges.end());
      }
      r.add(w, c1 * c2);
    }
  }
  return r;
}

// Matrices u_e attached to the edges, over an exact field.
template <class K>
class Representation {
 public:
  Representation() = default;
  Representation(const Quiver* q, DimVector dim, std::map<int, Matrix<K>> matrices)
      : quiver_(q), dim_(std::move(dim)), matrices_(std::move(matrices)) {
    for (const auto& e : q->edges()) {
      auto it = matrices_.find(e.id);
      if (it == matrices_.end()) {
        matrices_.emplace(e.id,
                          Matrix<K>(dim_.at(e.target), dim_.at(e.source)));
        continue;
      }
      if (static_cast<int>(it->second.rows()) != dim_.at(e.target) ||
          static_cast<int>(it->second.cols()) != dim_.at(e.source))
        throw std::invalid_argument("matrix shape mismatch on edge " + std::to_string(e.id));
    }
  }

  const Quiver& quiver() const { return *quiver_; }
  const Quiver* quiver_ptr() const { return quiver_; }
  const DimVector& dim() const { return dim_; }
  const Matrix<K>& matrix(int edge_id) const { return matrices_.at(edge_id); }
  const std::map<int, Matrix<K>>& matrices() const { return matrices_; }

 private:
  const Quiver* quiver_ = nullptr;
  DimVector dim_;
  std::map<int, Matrix<K>> matrices_;
};

// Evaluate a word on a representation: u_{e_n} o ... o u_{e_1}.
template <class K>
Matrix<K> evaluate_word(const PathWord& w, const Representation<K>& rep) {
  const Quiver& q = rep.quiver();
  if (w.length() == 0) return Matrix<K>::identity(rep.dim().at(w.trivial_vertex));
  Matrix<K> m = rep.matrix(w.edges[0]);
  for (std::size_t i = 1; i < w.edges.size(); ++i) m = rep.matrix(w.edges[i]) * m;
  (void)q;
  return m;
}

// Sum over words of f from a to b of coefficient times the matrix word;
// a trivial-path term contributes a scalar multiple of the identity.
template <class K>
Matrix<K> evaluate_series(const PathSeries<K>& f, const Representation<K>& rep, int a, int b) {
  if (f.quiver_ptr() != rep.quiver_ptr()) throw std::invalid_argument("quiver mismatch");
  const Quiver& q = rep.quiver();
  Matrix<K> out(rep.dim().at(b), rep.dim().at(a));
  for (const auto& [w, c] : f.coefficients()) {
    if (w.source(q) != a || w.target(q) != b) continue;
    out = out + c * evaluate_word(w, rep);
  }
  return out;
}

// u'_e = g_{t(e)}^{-1} u_e g_{s(e)}.
template <class K>
Representation<K> gauge_act(const std::map<int, Matrix<K>>& g, const Representation<K>& rep) {
  const Quiver& q = rep.quiver();
  std::map<int, Matrix<K>> ginv;
  for (int v : q.vertices()) {
    const auto& gv = g.at(v);
    if (static_cast<int>(gv.rows()) != rep.dim().at(v) || gv.rows() != gv.cols())
      throw std::invalid_argument("gauge matrix shape mismatch");
    auto inv = gv.inverse();
    if (!inv) throw std::invalid_argument("singular gauge matrix at vertex " + std::to_string(v));
    ginv.emplace(v, std::move(*inv));
  }
  std::map<int, Matrix<K>> out;
  for (const auto& e : q.edges())
    out.emplace(e.id, ginv.at(e.target) * rep.matrix(e.id) * g.at(e.source));
  return Representation<K>(rep.quiver_ptr(), rep.dim(), std::move(out));
}

// Max over lengths n >= 1 of (max |coeff| at length n)^(1/n), reported
// as a rational upper bound via n-th root bracketing.  Heuristic only: a
// truncation can never certify membership in the convergent subalgebra.
template <class K>
Rat growth_diagnostic(const PathSeries<K>& f, int bracket_bits = 20) {
  static_assert(field_traits<K>::ordered_abs, "growth diagnostic needs an absolute value");
  std::map<int, Rat> maxima;
  for (const auto& [w, c] : f.coefficients()) {
    if (w.length() == 0) continue;
    Rat a = field_traits<K>::abs(c);
    auto& m = maxima[static_cast<int>(w.length())];
    if (a > m) m = a;
  }
  Rat best(0);
  for (const auto& [n, m] : maxima) {
    if (m == 0) continue;
    if (n == 1) {
      if (m > best) best = m;
      continue;
    }
    auto pow_n = [n](const Rat& x) {
      Rat p(1);
      for (int i = 0; i < n; ++i) p *= x;
      return p;
    };
    // bracket m^(1/n) in [lo, hi], shrink to 2^-bracket_bits, report hi
    Rat lo(0), hi(1);
    while (pow_n(hi) < m) hi *= 2;
    for (int i = 0; i < bracket_bits; ++i) {
      Rat mid = (lo + hi) / 2;
      if (pow_n(mid) < m)
        lo = mid;
      else
        hi = mid;
    }
    if (hi > best) best = hi;
  }
  return best;
}

}  // namespace eql

#endif
