#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "g2s6/errors.hpp"
#include "g2s6/scalar.hpp"

namespace g2s6 {

/// Dense row-major complex matrix over one scalar backend. Vectors are n x 1.
template <Scalar S>
class CMatrix {
 public:
  using value_type = S;

  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  /// Row-major initializer.
  CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<S> entries) : rows_(rows), cols_(cols) {
    if (entries.size() != rows * cols) throw DomainError("CMatrix: initializer size mismatch");
    data_.assign(entries.begin(), entries.end());
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static CMatrix column(std::initializer_list<S> entries) {
    CMatrix m(entries.size(), 1);
    std::copy(entries.begin(), entries.end(), m.data_.begin());
    return m;
  }

  static CMatrix diagonal(std::initializer_list<S> entries) {
    CMatrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (const auto& e : entries) {
      m(i, i) = e;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Flat access, mostly for vectors.
  S& operator[](std::size_t k) { return data_[k]; }
  const S& operator[](std::size_t k) const { return data_[k]; }

  const std::vector<S>& data() const { return data_; }

  CMatrix transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  CMatrix conjugate() const {
    CMatrix c(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] = g2s6::conj(data_[k]);
    return c;
  }

  /// Conjugate transpose M*.
  CMatrix adjoint() const { return conjugate().transpose(); }

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("CMatrix::block out of range");
    CMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("CMatrix::set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  CMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  CMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  S trace() const {
    require_square("trace");
    S t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  CMatrix& operator*=(const S& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator-(CMatrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }
  friend CMatrix operator*(CMatrix a, const S& s) { return a *= s; }
  friend CMatrix operator*(const S& s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DomainError("CMatrix: cannot multiply " + a.shape() + " by " + b.shape());
    }
    CMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << (i + 1 == m.rows_ ? "]" : "\n");
    }
    return os;
  }

 private:
  void require_same_shape(const CMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DomainError(std::string("CMatrix: shape mismatch in ") + op + ": " + shape() + " vs " + o.shape());
    }
  }
  void require_square(const char* op) const {
    if (!is_square()) throw DomainError(std::string("CMatrix: ") + op + " needs a square matrix, got " + shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Largest entry magnitude; the residual measure used throughout.
template <Scalar S>
double max_abs(const CMatrix<S>& m) {
  double r = 0.0;
  for (const auto& e : m.data()) r = std::max(r, magnitude(e));
  return r;
}

template <Scalar S>
double max_abs_diff(const CMatrix<S>& a, const CMatrix<S>& b) {
  return max_abs(a - b);
}

template <Scalar S>
bool is_zero_matrix(const CMatrix<S>& m, double tol = 0.0) {
  return std::all_of(m.data().begin(), m.data().end(), [tol](const S& e) { return is_zero(e, tol); });
}

/// Dot product without conjugation: sum a_k b_k.
template <Scalar S>
S bilinear_dot(const CMatrix<S>& a, const CMatrix<S>& b) {
  if (a.size() != b.size()) throw DomainError("bilinear_dot: size mismatch");
  S s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// Hermitian inner product <a, b> = sum a_k conj(b_k).
template <Scalar S>
S hermitian_dot(const CMatrix<S>& a, const CMatrix<S>& b) {
  if (a.size() != b.size()) throw DomainError("hermitian_dot: size mismatch");
  S s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * conj(b[k]);
  return s;
}

/// Converts an exact matrix to the float backend.
inline CMatrix<Float> to_float(const CMatrix<Exact>& m) {
  CMatrix<Float> f(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) f[k] = m[k].to_complex();
  return f;
}

}  // namespace g2s6
