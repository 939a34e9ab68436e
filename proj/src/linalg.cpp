#include "rp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rp {

HermMatrix::HermMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw NumericalError("Hermitian matrix must be square");
  double dev = 0.0;
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = i; j < m_.cols(); ++j)
      dev = std::max(dev, std::abs(m_(i, j) - std::conj(m_(j, i))));
  if (dev > 1e-10 * (1.0 + m_.max_abs()))
    throw NumericalError("matrix is not Hermitian within tolerance");
  // Symmetrize the rounding noise so the Jacobi sweeps see exact pairs.
  for (int i = 0; i < m_.rows(); ++i) {
    m_(i, i) = m_(i, i).real();
    for (int j = i + 1; j < m_.cols(); ++j) {
      const cplx avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

std::string PsdCertificate::text() const {
  std::ostringstream os;
  os << (psd ? "psd" : "not_psd");
  if (marginal) os << " (marginal: min eigenvalue within tolerance of zero)";
  os << ", min eigenvalue " << min_eigenvalue << ", tolerance " << tolerance_used;
  return os.str();
}

EigenDecomposition herm_eigen(const HermMatrix& hm) {
  const int n = hm.dimension();
  ComplexMatrix a = hm.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.max_abs());
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-14 * scale * n) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx b = a(p, q);
        if (std::abs(b) <= 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Factor the phase out of b, then use the stable real-Jacobi tangent:
        // the smaller root of t^2 + 2 theta t - 1 = 0 sends the rotation to
        // the identity as |b| -> 0 even when the diagonal is degenerate.
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double absb = std::abs(b);
        const cplx phase = b / absb;
        const double theta = (aqq - app) / (2.0 * absb);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double co = 1.0 / std::sqrt(t * t + 1.0);
        const double si = t * co;
        // U = diag(1, conj(phase)) * [[co, si], [-si, co]] annihilates a(p,q).
        const cplx c11 = co, c12 = si;
        const cplx c21 = -si * std::conj(phase), c22 = co * std::conj(phase);

        for (int k = 0; k < n; ++k) {  // A <- A U on columns p, q
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c11 + akq * c21;
          a(k, q) = akp * c12 + akq * c22;
        }
        for (int k = 0; k < n; ++k) {  // A <- U* A on rows p, q
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(c11) * apk + std::conj(c21) * aqk;
          a(q, k) = std::conj(c12) * apk + std::conj(c22) * aqk;
        }
        for (int k = 0; k < n; ++k) {  // V <- V U
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c11 + vkq * c21;
          v(k, q) = vkp * c12 + vkq * c22;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }
  if (sweep == kMaxSweeps) {
    std::ostringstream os;
    os << "Jacobi sweeps did not converge: n=" << n << " max|entry|=" << a.max_abs();
    throw NumericalError(os.str());
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    d.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) d.eigenvectors(i, j) = v(i, order[j]);
  }
  return d;
}

PsdCertificate psd_check(const HermMatrix& m, double tol) {
  if (tol < 0.0) throw NumericalError("psd tolerance must be nonnegative");
  PsdCertificate cert;
  cert.tolerance_used = tol;
  if (m.dimension() == 0) {  // empty matrix is vacuously psd
    cert.psd = true;
    return cert;
  }
  const EigenDecomposition d = herm_eigen(m);
  cert.min_eigenvalue = d.eigenvalues.front();
  const double threshold = tol * std::max(1.0, m.matrix().norm_inf());
  cert.psd = cert.min_eigenvalue >= -threshold;
  cert.marginal = cert.psd && cert.min_eigenvalue < 0.0;
  cert.witness.resize(m.dimension());
  for (int i = 0; i < m.dimension(); ++i) cert.witness[i] = d.eigenvectors(i, 0);
  return cert;
}

namespace {

// Solve A X = B by Gaussian elimination with partial pivoting.
ComplexMatrix solve(ComplexMatrix a, ComplexMatrix b) {
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (std::abs(a(piv, col)) <= 1e-300) throw NumericalError("singular system in Pade solve");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(b(col, j), b(piv, j));
      }
    for (int i = col + 1; i < n; ++i) {
      const cplx f = a(i, col) / a(col, col);
      if (f == cplx{}) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      for (int j = 0; j < n; ++j) b(i, j) -= f * b(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < n; ++j) b(col, j) /= a(col, col);
    for (int i = 0; i < col; ++i) {
      const cplx f = a(i, col);
      if (f == cplx{}) continue;
      for (int j = 0; j < n; ++j) b(i, j) -= f * b(col, j);
    }
  }
  return b;
}

ComplexMatrix pade13_exp(ComplexMatrix a) {
  static const double b[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
  constexpr double kTheta13 = 5.371920351148152;

  const double norm1 = a.norm_one();
  if (!std::isfinite(norm1) || norm1 > 1e154)
    throw NumericalError("matrix exponential argument too large to represent");
  int s = 0;
  if (norm1 > kTheta13) s = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  if (s > 0) a *= cplx(std::ldexp(1.0, -s), 0.0);

  const int n = a.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  ComplexMatrix u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
  u = a * u;
  ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  ComplexMatrix r = solve(v - u, v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

}  // namespace

ComplexMatrix matrix_exp(const ComplexMatrix& m, bool hermitian_hint) {
  if (m.rows() != m.cols()) throw NumericalError("matrix exponential needs a square matrix");
  if (hermitian_hint) {
    const EigenDecomposition d = herm_eigen(HermMatrix(m));
    const int n = m.rows();
    ComplexMatrix scaled = d.eigenvectors;
    for (int j = 0; j < n; ++j) {
      const double e = std::exp(d.eigenvalues[j]);
      if (!std::isfinite(e)) throw NumericalError("matrix exponential overflow");
      for (int i = 0; i < n; ++i) scaled(i, j) *= e;
    }
    return scaled * d.eigenvectors.adjoint();
  }
  return pade13_exp(m);
}

}  // namespace rp
