#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace rp {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Small sizes only; everything by value.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y) { return x += y; }
  friend ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y) { return x -= y; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix x) { return x *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    assert(x.cols_ == y.rows_);
    ComplexMatrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        cplx xik = x(i, k);
        if (xik == cplx{}) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  // tr(this * other) without forming the product.
  cplx trace_product(const ComplexMatrix& o) const {
    assert(cols_ == o.rows_ && rows_ == o.cols_);
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) t += (*this)(i, k) * o(k, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  // Maximum absolute row sum.
  double norm_inf() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  // Maximum absolute column sum.
  double norm_one() const {
    double m = 0.0;
    for (int j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
  }

  // Kronecker product, row-major convention.
  friend ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) {
        cplx xij = x(i, j);
        if (xij == cplx{}) continue;
        for (int k = 0; k < y.rows_; ++k)
          for (int l = 0; l < y.cols_; ++l)
            r(i * y.rows_ + k, j * y.cols_ + l) = xij * y(k, l);
      }
    return r;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

inline ComplexMatrix pauli(int a) {
  ComplexMatrix m(2, 2);
  switch (a) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: assert(false);
  }
  return m;
}

}  // namespace rp
