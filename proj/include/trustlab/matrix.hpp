#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace trustlab {

// Dense row-major matrix of doubles. Deliberately small: every solver here
// needs explicit control over elementwise steps, and all problem sizes are
// desk scale (n up to a few hundred, rank up to ~100).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double& at_flat(std::size_t t) { return a_[t]; }
  double at_flat(std::size_t t) const { return a_[t]; }
  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// C = A * B, naive ikj order (cache-friendly enough at this scale).
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix c(a.rows(), b.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

// C = A^T * B without materializing the transpose.
inline Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: shape mismatch");
  Matrix c(a.cols(), b.cols(), 0.0);
  for (int k = 0; k < a.rows(); ++k) {
    for (int i = 0; i < a.cols(); ++i) {
      const double aki = a(k, i);
      if (aki == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aki * b(k, j);
    }
  }
  return c;
}

// C = A * B^T.
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: shape mismatch");
  Matrix c(a.rows(), b.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(j, k);
      c(i, j) = s;
    }
  return c;
}

inline void add_scaled_inplace(Matrix& a, const Matrix& b, double s) {
  assert(a.same_shape(b));
  for (std::size_t t = 0; t < a.size(); ++t) a.at_flat(t) += s * b.at_flat(t);
}

inline Matrix hadamard(const Matrix& a, const Matrix& b) {
  assert(a.same_shape(b));
  Matrix c = a;
  for (std::size_t t = 0; t < c.size(); ++t) c.at_flat(t) *= b.at_flat(t);
  return c;
}

inline double frob_sq(const Matrix& a) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a.at_flat(t) * a.at_flat(t);
  return s;
}

inline double diff_frob_sq(const Matrix& a, const Matrix& b) {
  assert(a.same_shape(b));
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double d = a.at_flat(t) - b.at_flat(t);
    s += d * d;
  }
  return s;
}

// Dense 3-way tensor, layout (i, j, c) with c fastest.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2, double fill = 0.0)
      : d0_(d0), d1_(d1), d2_(d2),
        a_(static_cast<std::size_t>(d0) * d1 * d2, fill) {
    if (d0 < 0 || d1 < 0 || d2 < 0) throw std::invalid_argument("Tensor3: negative shape");
  }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  std::size_t size() const { return a_.size(); }

  double& operator()(int i, int j, int c) {
    assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && c >= 0 && c < d2_);
    return a_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + c];
  }
  double operator()(int i, int j, int c) const {
    assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && c >= 0 && c < d2_);
    return a_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + c];
  }
  double& at_flat(std::size_t t) { return a_[t]; }
  double at_flat(std::size_t t) const { return a_[t]; }

  Matrix slice2(int c) const {
    Matrix m(d0_, d1_);
    for (int i = 0; i < d0_; ++i)
      for (int j = 0; j < d1_; ++j) m(i, j) = (*this)(i, j, c);
    return m;
  }

 private:
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<double> a_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace trustlab
