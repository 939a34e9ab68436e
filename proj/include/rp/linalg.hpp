#pragma once

#include <string>
#include <vector>

#include "rp/complex_matrix.hpp"

namespace rp {

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix checked to be Hermitian (within a fixed relative tolerance) at
// construction.
class HermMatrix {
public:
  explicit HermMatrix(ComplexMatrix m);

  int dimension() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }

private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns match eigenvalues
};

struct PsdCertificate {
  bool psd = false;
  bool marginal = false;  // min eigenvalue in (-tol, 0): boundary model
  double min_eigenvalue = 0.0;
  std::vector<cplx> witness;  // eigenvector of the minimum eigenvalue
  double tolerance_used = 0.0;

  std::string text() const;
};

// Cyclic Jacobi for complex Hermitian matrices.
EigenDecomposition herm_eigen(const HermMatrix& m);

// PSD iff min eigenvalue >= -tol * max(1, ||M||_inf).
PsdCertificate psd_check(const HermMatrix& m, double tol);

// Hermitian hint: exponential through the eigendecomposition. Otherwise
// scaling and squaring with the order-13 Pade approximant.
ComplexMatrix matrix_exp(const ComplexMatrix& m, bool hermitian_hint);

}  // namespace rp
