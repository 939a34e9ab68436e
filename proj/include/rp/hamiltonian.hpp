#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rp/linalg.hpp"
#include "rp/reflection.hpp"

namespace rp {

// Coupling constants J indexed by the canonical tuple set over the plus
// half; the Hamiltonian they define is H = -sum J_{II'} Theta(C_I) o C_I'.
struct CouplingMatrix {
  BasisCoefficients entries;
  TwistChoice twist = TwistChoice::plus_i();

  cplx at(BasisIndex row, BasisIndex col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? cplx{} : it->second;
  }
  void set(BasisIndex row, BasisIndex col, cplx value) {
    if (value == cplx{})
      entries.erase({row, col});
    else
      entries[{row, col}] = value;
  }
};

// The 2x2 block split of J with the empty tuple first: the additive energy
// constant E, the one-sided couplings V, and the couplings across the
// reflection plane J0.
struct CouplingDecomposition {
  cplx energy;                                   // J_{empty,empty}
  std::map<BasisIndex, cplx> one_sided;          // V_I = J_{I,empty}
  BasisCoefficients across;                      // J0, both indices nonempty
  AlgebraElement h_minus, h_zero, h_plus;        // H = H- + H0 + H+ - E
};

struct HamiltonianProperties {
  bool reflection_invariant = false;  // J hermitian
  bool gauge_invariant = false;       // J supported on equal-parity index pairs
  bool hermitian = false;             // s_I s_I' J_{II'} real
};

AlgebraElement build_hamiltonian(const Lattice& lattice, const CouplingMatrix& j);
CouplingMatrix extract_couplings(const Lattice& lattice, TwistChoice zeta,
                                 const AlgebraElement& h);

CouplingDecomposition decompose(const Lattice& lattice, const CouplingMatrix& j);

// Exact entrywise checks; inputs are exact user data.
HamiltonianProperties check_properties(const CouplingMatrix& j);
// Toleranced variant for round-tripped matrices (relative tolerance).
HamiltonianProperties check_properties(const CouplingMatrix& j, double rel_tol);

// Dense image of the J0 block over the graded-lex order of nonempty tuples.
// Returned labels give the tuple for each row/column.
std::pair<std::vector<BasisIndex>, ComplexMatrix> dense_across_block(const PlusBasis& basis,
                                                                     const CouplingMatrix& j);

// Dense image of all of J over the graded-lex order of the full tuple set.
ComplexMatrix dense_full(const PlusBasis& basis, const CouplingMatrix& j);

}  // namespace rp
