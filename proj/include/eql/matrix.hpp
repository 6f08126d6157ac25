#ifndef EQL_MATRIX_HPP
#define EQL_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "eql/field.hpp"

// Dense exact linear algebra at desk scale: rref with deterministic
// (first nonzero) pivoting, kernel/image bases, solving and inversion.

namespace eql {

template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != K(0)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Matrix operator*(const K& c, const Matrix& x) {
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols_ == y.rows_);
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == K(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    assert(v.size() == cols_);
    std::vector<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != K(0)) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  K trace() const {
    assert(rows_ == cols_);
    K t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == K(0)) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K inv = K(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == K(0)) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Basis of the right kernel, as columns.
  std::vector<std::vector<K>> kernel_basis() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<K> v(cols_, K(0));
      v[c] = K(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Column-space basis: the columns whose indices are pivot columns.
  std::vector<std::vector<K>> image_basis() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<std::vector<K>> basis;
    for (auto c : pivots) {
      std::vector<K> v(rows_);
      for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of A x = b, or nullopt.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    assert(b.size() == rows_);
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

  // Solutions of A X = B for all columns at once, or nullopt.
  std::optional<Matrix> solve_many(const Matrix& b) const {
    assert(b.rows() == rows_);
    Matrix aug(rows_, cols_ + b.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) aug(i, cols_ + j) = b(i, j);
    }
    auto pivots = aug.rref();
    for (auto p : pivots)
      if (p >= cols_) return std::nullopt;
    Matrix x(cols_, b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, cols_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    assert(rows_ == cols_);
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = K(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1) {
      // pivots must be exactly the first block
      bool ok = pivots.size() == rows_;
      for (std::size_t r = 0; ok && r < rows_; ++r) ok = pivots[r] == r;
      if (!ok) return std::nullopt;
    }
    if (pivots.size() != rows_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<K>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

// Express v in the span of the columns of B, if possible.
template <class K>
std::optional<std::vector<K>> coordinates_in(const Matrix<K>& basis, const std::vector<K>& v) {
  return basis.solve(v);
}

}  // namespace eql

#endif
