#pragma once

// Dense exact linear algebra.
//
// Vectors are std::vector<K>. Matrices are row-major. Elimination pivots on
// the first nonzero entry in column order, scanning rows top to bottom, so
// every basis returned here is reproducible.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiorth/field.hpp"

namespace semiorth {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) {
  return Vec<K>(n, K(0));
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return is_zero(x); });
}

template <class K>
void axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class K>
Vec<K> sub(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class K>
Vec<K> scale(const K& a, const Vec<K>& v) {
  Vec<K> r = v;
  for (auto& x : r) x *= a;
  return r;
}

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("ragged row list");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<K> col(std::size_t j) const {
    Vec<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const Vec<K>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return semiorth::is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (semiorth::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!semiorth::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  /// Row vector times matrix.
  friend Vec<K> operator*(const Vec<K>& v, const Matrix& m) {
    if (v.size() != m.rows_) throw DimensionError("vector-matrix shape mismatch");
    Vec<K> r(m.cols_, K(0));
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (semiorth::is_zero(v[i])) continue;
      for (std::size_t j = 0; j < m.cols_; ++j)
        if (!semiorth::is_zero(m(i, j))) r[j] += v[i] * m(i, j);
    }
    return r;
  }

  /// Matrix times column vector.
  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vec<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!semiorth::is_zero(v[j]) && !semiorth::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  const std::vector<K>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row (nonzero rows come first).
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    K inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

/// Basis of the right null space {v : m v = 0}; free variables in column
/// order, each basis vector has a 1 in its free column.
template <class K>
std::vector<Vec<K>> kernel_basis(Matrix<K> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Left null space {v : v m = 0}.
template <class K>
std::vector<Vec<K>> left_kernel_basis(const Matrix<K>& m) {
  return kernel_basis(m.transpose());
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<Vec<K>> solve_linear(const Matrix<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw DimensionError("solve_linear: rhs length != rows");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  Vec<K> x(m.cols(), K(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, m.cols());
  }
  return x;
}

template <class K>
std::optional<Matrix<K>> invert(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionError("invert: not square");
  std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: not square");
  K det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// A subspace of K^n kept in reduced row echelon form; grows one vector at
/// a time.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<K>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after elimination against the basis.
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      K f = v[pivots_[r]];
      if (is_zero(f)) continue;
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

  /// Coordinates of v (assumed inside) with respect to basis().
  Vec<K> coordinates(const Vec<K>& v) const {
    Vec<K> c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  /// Adds v; returns false when v was already in the span.
  bool add(const Vec<K>& v) {
    if (v.size() != n_) throw DimensionError("Subspace::add: wrong ambient dimension");
    Vec<K> w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && is_zero(w[p])) ++p;
    if (p == n_) return false;
    K inv = inverse(w[p]);
    for (std::size_t j = p; j < n_; ++j) w[j] *= inv;
    for (auto& row : rows_) {
      K f = row[p];
      if (is_zero(f)) continue;
      for (std::size_t j = p; j < n_; ++j)
        if (!is_zero(w[j])) row[j] -= f * w[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  void add_all(const std::vector<Vec<K>>& vs) {
    for (const auto& v : vs) add(v);
  }

  /// Coordinates on a complement: the entries of reduce(v) in the non-pivot
  /// columns. Identifies K^n / this with K^(n - dim).
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> free;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (r < pivots_.size() && pivots_[r] == c) {
        ++r;
        continue;
      }
      free.push_back(c);
    }
    return free;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class K>
Subspace<K> span_of(std::size_t ambient, const std::vector<Vec<K>>& vs) {
  Subspace<K> s(ambient);
  s.add_all(vs);
  return s;
}

/// Quotient K^n / U with explicit coordinates: project(v) in K^(n - dim U),
/// lift(q) the section through the free columns.
template <class K>
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace<K> sub) : sub_(std::move(sub)), free_(sub_.free_columns()) {}

  std::size_t dim() const { return free_.size(); }
  const Subspace<K>& kernel() const { return sub_; }

  Vec<K> project(const Vec<K>& v) const {
    Vec<K> red = sub_.reduce(v);
    Vec<K> q(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) q[i] = red[free_[i]];
    return q;
  }

  Vec<K> lift(const Vec<K>& q) const {
    Vec<K> v(sub_.ambient(), K(0));
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
  }

  /// Ambient index of the i-th quotient basis vector.
  std::size_t lifted_index(std::size_t i) const { return free_[i]; }

 private:
  Subspace<K> sub_;
  std::vector<std::size_t> free_;
};

}  // namespace semiorth
