#pragma once

#include <vector>

#include "rp/clifford.hpp"
#include "rp/complex_matrix.hpp"
#include "rp/linalg.hpp"
#include "rp/reflection.hpp"
#include "rp/report.hpp"

namespace rp {

// Faithful Jordan-Wigner image of the Majorana algebra: generator 2p-1 maps
// to sigma3^(p-1) (x) sigma1 (x) I..., generator 2p to the same with sigma2.
// Odd site counts get one padding Majorana; the normalized trace does not
// see it.
class Representation {
public:
  explicit Representation(const Lattice& lattice);

  const Lattice& lattice() const { return *lattice_; }
  int qubits() const { return qubits_; }
  int dimension() const { return 1 << qubits_; }
  bool padded() const { return padded_; }
  const ComplexMatrix& generator(int site) const { return generators_[site]; }

private:
  const Lattice* lattice_;
  int qubits_;
  bool padded_;
  std::vector<ComplexMatrix> generators_;
};

inline Representation build_representation(const Lattice& lattice) {
  return Representation(lattice);
}

ComplexMatrix represent(const AlgebraElement& a, const Representation& rep);

// Normalized matrix trace, which coincides with the algebraic trace.
cplx normalized_trace(const ComplexMatrix& m);

cplx boltzmann(const AlgebraElement& a, const AlgebraElement& h, double beta,
               const Representation& rep);
cplx gibbs(const AlgebraElement& a, const AlgebraElement& h, double beta,
           const Representation& rep);

struct GramMatrix {
  std::vector<BasisIndex> basis_labels;  // all of the canonical tuple set
  ComplexMatrix entries;                 // <C_I, C_I'> under omega or rho
  cplx partition_sum;
};

GramMatrix gram_matrix(const AlgebraElement& h, double beta, const Representation& rep,
                       TwistChoice zeta, bool normalized);

std::string render_witness(const std::vector<BasisIndex>& labels,
                           const std::vector<cplx>& witness, const Lattice& lattice);

RPReport rp_oracle(const AlgebraElement& h, double beta, const Representation& rep,
                   TwistChoice zeta, double tol);

}  // namespace rp
