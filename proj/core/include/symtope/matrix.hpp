#pragma once

#include "symtope/arith.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symtope {

// Dense row-major matrix over Integer or Rational.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("ragged matrix literal");
      for (long x : row)
        data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>> &columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows)
        throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i)
        m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T> &data() const { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t> &cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k)
        m(i, k) = (*this)(i, cols[k]);
    return m;
  }

  Matrix select_rows(const std::vector<std::size_t> &rows) const {
    Matrix m(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j)
        m(k, j) = (*this)(rows[k], j);
    return m;
  }

  Matrix submatrix(const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        m(a, b) = (*this)(rows[a], cols[b]);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const T &c) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += c * (*this)(src, j);
  }
  // col[dst] += c * col[src]
  void add_col(std::size_t dst, std::size_t src, const T &c) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += c * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, c) = -(*this)(i, c);
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (x != 0)
        return false;
    return true;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<T> operator*(const std::vector<T> &v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] += (*this)(i, j) * v[j];
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntegerMatrix &a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = Rational(a(i, j));
  return r;
}

inline RatVector to_rational(const IntVector &v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto &x : v)
    r.emplace_back(x);
  return r;
}

inline RatVector mul(const IntegerMatrix &a, const RatVector &v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        out[i] += Rational(a(i, j)) * v[j];
  return out;
}

template <class T> T dot(const std::vector<T> &a, const std::vector<T> &b) {
  assert(a.size() == b.size());
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVector &a, const IntVector &b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0)
      s += a[i] * b[i];
  return s;
}

} // namespace symtope
