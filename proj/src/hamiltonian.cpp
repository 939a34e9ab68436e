#include "rp/hamiltonian.hpp"

#include <cmath>

namespace rp {

AlgebraElement build_hamiltonian(const Lattice& lattice, const CouplingMatrix& j) {
  AlgebraElement h;
  for (const auto& [key, value] : j.entries) {
    if ((key.first | key.second) & ~lattice.plus_mask())
      throw ConfigError("coupling index outside the plus half of the lattice");
    h -= value * basis_element(lattice, j.twist, key.first, key.second);
  }
  return h;
}

CouplingMatrix extract_couplings(const Lattice& lattice, TwistChoice zeta,
                                 const AlgebraElement& h) {
  CouplingMatrix j;
  j.twist = zeta;
  for (const auto& [key, value] : basis_expand(lattice, zeta, h)) j.set(key.first, key.second, -value);
  return j;
}

CouplingDecomposition decompose(const Lattice& lattice, const CouplingMatrix& j) {
  CouplingDecomposition d;
  CouplingMatrix minus_part, zero_part, plus_part;
  minus_part.twist = zero_part.twist = plus_part.twist = j.twist;
  d.energy = j.at(0, 0);
  for (const auto& [key, value] : j.entries) {
    const auto [row, col] = key;
    if (row == 0 && col == 0) continue;
    if (col == 0) {
      d.one_sided[row] = value;
      minus_part.set(row, col, value);
    } else if (row == 0) {
      plus_part.set(row, col, value);  // the V* block; equals Theta(H-) iff RI
    } else {
      d.across[key] = value;
      zero_part.set(row, col, value);
    }
  }
  d.h_minus = build_hamiltonian(lattice, minus_part);
  d.h_zero = build_hamiltonian(lattice, zero_part);
  d.h_plus = build_hamiltonian(lattice, plus_part);
  return d;
}

namespace {

HamiltonianProperties check_properties_impl(const CouplingMatrix& j, double tol) {
  HamiltonianProperties p;
  p.reflection_invariant = true;
  p.gauge_invariant = true;
  p.hermitian = true;
  double scale = 0.0;
  for (const auto& [key, value] : j.entries) scale = std::max(scale, std::abs(value));
  const double eps = tol * scale;
  for (const auto& [key, value] : j.entries) {
    const auto [row, col] = key;
    if (std::abs(value - std::conj(j.at(col, row))) > eps) p.reflection_invariant = false;
    if ((word_length(row) & 1) != (word_length(col) & 1) && std::abs(value) > eps)
      p.gauge_invariant = false;
    const cplx scaled = s_factor(row, j.twist) * s_factor(col, j.twist) * value;
    if (std::abs(scaled.imag()) > eps) p.hermitian = false;
  }
  return p;
}

}  // namespace

HamiltonianProperties check_properties(const CouplingMatrix& j) {
  return check_properties_impl(j, 0.0);
}

HamiltonianProperties check_properties(const CouplingMatrix& j, double rel_tol) {
  return check_properties_impl(j, rel_tol);
}

std::pair<std::vector<BasisIndex>, ComplexMatrix> dense_across_block(const PlusBasis& basis,
                                                                     const CouplingMatrix& j) {
  std::vector<BasisIndex> labels;
  for (BasisIndex idx : basis.indices())
    if (idx != 0) labels.push_back(idx);
  const int n = static_cast<int>(labels.size());
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = j.at(labels[r], labels[c]);
  return {labels, m};
}

ComplexMatrix dense_full(const PlusBasis& basis, const CouplingMatrix& j) {
  const int n = basis.size();
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = j.at(basis.index(r), basis.index(c));
  return m;
}

}  // namespace rp
