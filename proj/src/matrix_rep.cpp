#include "rp/matrix_rep.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "rp/parallel.hpp"

namespace rp {

Representation::Representation(const Lattice& lattice) : lattice_(&lattice) {
  const int n = lattice.size();
  if (n > 20) throw ConfigError("matrix representation capped at 20 Majoranas");
  qubits_ = (n + 1) / 2;
  padded_ = (n % 2) != 0;

  generators_.reserve(n);
  for (int site = 0; site < n; ++site) {
    const int pair_index = site / 2;      // qubit carrying this generator
    const int channel = (site % 2) ? 2 : 1;  // sigma1 or sigma2
    ComplexMatrix g(1, 1);
    g(0, 0) = 1.0;
    for (int q = 0; q < qubits_; ++q) {
      if (q < pair_index)
        g = kron(g, pauli(3));
      else if (q == pair_index)
        g = kron(g, pauli(channel));
      else
        g = kron(g, pauli(0));
    }
    generators_.push_back(std::move(g));
  }
}

cplx normalized_trace(const ComplexMatrix& m) {
  return m.trace() / static_cast<double>(m.rows());
}

ComplexMatrix represent(const AlgebraElement& a, const Representation& rep) {
  const int dim = rep.dimension();
  ComplexMatrix result(dim, dim);
  for (const auto& [w, amp] : a.terms()) {
    if (w & ~rep.lattice().full_mask())
      throw ConfigError("element references sites outside the represented lattice");
    ComplexMatrix term = ComplexMatrix::identity(dim);
    MajoranaWord rest = w;
    while (rest) {
      term = term * rep.generator(std::countr_zero(rest));
      rest &= rest - 1;
    }
    term *= amp;
    result += term;
  }
  return result;
}

cplx boltzmann(const AlgebraElement& a, const AlgebraElement& h, double beta,
               const Representation& rep) {
  const ComplexMatrix hm = cplx(-beta, 0.0) * represent(h, rep);
  const ComplexMatrix weight = matrix_exp(hm, false);
  return normalized_trace(represent(a, rep) * weight);
}

cplx gibbs(const AlgebraElement& a, const AlgebraElement& h, double beta,
           const Representation& rep) {
  const ComplexMatrix weight = matrix_exp(cplx(-beta, 0.0) * represent(h, rep), false);
  const cplx z = normalized_trace(weight);
  if (std::abs(z) <= 1e-12)
    throw NumericalError("partition sum vanishes; Gibbs functional undefined");
  return normalized_trace(represent(a, rep) * weight) / z;
}

GramMatrix gram_matrix(const AlgebraElement& h, double beta, const Representation& rep,
                       TwistChoice zeta, bool normalized) {
  const Lattice& lattice = rep.lattice();
  const PlusBasis basis(lattice);
  const int n = basis.size();

  const ComplexMatrix weight = matrix_exp(cplx(-beta, 0.0) * represent(h, rep), false);
  const cplx z = normalized_trace(weight);
  if (normalized && std::abs(z) <= 1e-12)
    throw NumericalError("partition sum vanishes; Gibbs functional undefined");

  GramMatrix g;
  g.basis_labels = basis.indices();
  g.partition_sum = z;
  g.entries = ComplexMatrix(n, n);
  parallel_for(n, [&](int r) {
    for (int c = 0; c < n; ++c) {
      const AlgebraElement e =
          basis_element(lattice, zeta, basis.index(r), basis.index(c));
      cplx v = normalized_trace(represent(e, rep) * weight);
      if (normalized) v /= z;
      g.entries(r, c) = v;
    }
  });
  return g;
}

std::string render_witness(const std::vector<BasisIndex>& labels,
                           const std::vector<cplx>& witness, const Lattice& lattice) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < labels.size(); ++k) {
    if (std::abs(witness[k]) < 1e-12) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << witness[k].real() << (witness[k].imag() < 0 ? "" : "+") << witness[k].imag()
       << "i)*";
    if (labels[k] == 0) {
      os << "I";
    } else {
      MajoranaWord rest = labels[k];
      while (rest) {
        os << "c" << lattice.name(std::countr_zero(rest));
        rest &= rest - 1;
      }
    }
  }
  return first ? "0" : os.str();
}

RPReport rp_oracle(const AlgebraElement& h, double beta, const Representation& rep,
                   TwistChoice zeta, double tol) {
  const GramMatrix g = gram_matrix(h, beta, rep, zeta, false);
  const PsdCertificate cert = psd_check(HermMatrix(g.entries), tol);

  RPReport report;
  report.provenance = "oracle";
  report.rp = cert.psd;
  report.marginal = cert.marginal;
  report.min_eigenvalue = cert.min_eigenvalue;
  report.tolerance = cert.tolerance_used;
  report.beta = beta;
  report.partition_sum = g.partition_sum;
  if (!cert.psd) {
    report.witness = render_witness(g.basis_labels, cert.witness, rep.lattice());
    // omega(Theta(A) o A) for A given by the witness coefficients.
    cplx value = 0.0;
    for (size_t r = 0; r < cert.witness.size(); ++r)
      for (size_t c = 0; c < cert.witness.size(); ++c)
        value += std::conj(cert.witness[r]) * cert.witness[c] *
                 g.entries(static_cast<int>(r), static_cast<int>(c));
    report.witness_value = value.real();
  }
  return report;
}

}  // namespace rp
