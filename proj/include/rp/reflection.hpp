#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rp/clifford.hpp"
#include "rp/lattice.hpp"

namespace rp {

// The twist zeta = +i or -i, fixed per run.
class TwistChoice {
public:
  static TwistChoice plus_i() { return TwistChoice(1); }
  static TwistChoice minus_i() { return TwistChoice(3); }

  // zeta^n for any integer n.
  cplx pow(long n) const {
    static const cplx table[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    long e = (n * unit_ % 4 + 4) % 4;
    return table[e];
  }
  cplx value() const { return pow(1); }
  bool is_plus_i() const { return unit_ == 1; }

private:
  explicit TwistChoice(int unit) : unit_(unit) {}
  int unit_;  // power of i representing zeta
};

// Index into the reflection-adapted basis: a subset of the plus half,
// identified with the canonical ascending tuple over those sites.
using BasisIndex = MajoranaWord;  // mask supported on lattice.plus_mask()

inline int q_factor(BasisIndex idx) { return adjoint_sign(word_length(idx)); }
inline cplx s_factor(BasisIndex idx, TwistChoice zeta) {
  const long k = word_length(idx);
  return zeta.pow(k * (k - 1) / 2);
}

// The canonical tuple set over the plus half, enumerated graded-
// lexicographically: by length, then lexicographically on the ascending
// site tuple. The empty tuple comes first, which makes the (E, V, J0)
// block structure of coupling matrices automatic.
class PlusBasis {
public:
  explicit PlusBasis(const Lattice& lattice);

  int size() const { return static_cast<int>(indices_.size()); }
  BasisIndex index(int pos) const { return indices_[pos]; }
  int position(BasisIndex idx) const { return position_.at(idx); }
  const std::vector<BasisIndex>& indices() const { return indices_; }

private:
  std::vector<BasisIndex> indices_;
  std::map<BasisIndex, int> position_;
};

using BasisCoefficients = std::map<std::pair<BasisIndex, BasisIndex>, cplx>;

AlgebraElement reflect(const Lattice& lattice, const AlgebraElement& a);

AlgebraElement twisted_product(const Lattice& lattice, TwistChoice zeta,
                               const AlgebraElement& a, const AlgebraElement& b);

// The basis element Theta(C_I) o C_I' as a (single-word) algebra element.
AlgebraElement basis_element(const Lattice& lattice, TwistChoice zeta, BasisIndex row,
                             BasisIndex col);

BasisCoefficients basis_expand(const Lattice& lattice, TwistChoice zeta,
                               const AlgebraElement& a);
AlgebraElement basis_assemble(const Lattice& lattice, TwistChoice zeta,
                              const BasisCoefficients& coeffs);

}  // namespace rp
