#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rp/lattice.hpp"

namespace rp {

using cplx = std::complex<double>;

// A canonically ordered product of distinct Majorana generators, stored as a
// bitmask over the global site order. The empty mask is the identity.
using MajoranaWord = uint64_t;

inline int word_length(MajoranaWord w) { return std::popcount(w); }
inline bool word_is_odd(MajoranaWord w) { return word_length(w) & 1; }

// Sign picked up when a single generator j is absorbed from the right into
// the canonical word `acc`: one transposition per generator above j, and
// c_j^2 = I if j is already present. Toggling the bit realizes both cases.
inline int absorb_generator(MajoranaWord& acc, int j) {
  const MajoranaWord above = (j == 63) ? 0 : acc >> (j + 1) << (j + 1);
  acc ^= MajoranaWord{1} << j;
  return (std::popcount(above) & 1) ? -1 : 1;
}

// Canonicalize an arbitrary generator sequence (duplicates allowed).
inline std::pair<MajoranaWord, int> canonicalize(const std::vector<int>& seq) {
  MajoranaWord w = 0;
  int sign = 1;
  for (int j : seq) sign *= absorb_generator(w, j);
  return {w, sign};
}

// Sign of the canonical product word(a) * word(b) relative to word(a ^ b).
inline int product_sign(MajoranaWord a, MajoranaWord b) {
  int sign = 1;
  MajoranaWord acc = a;
  while (b) {
    const int j = std::countr_zero(b);
    sign *= absorb_generator(acc, j);
    b &= b - 1;
  }
  return sign;
}

// Exponent parity sign (-1)^{k(k-1)/2} appearing in the word adjoint rule.
inline int adjoint_sign(int k) { return (k % 4 == 2 || k % 4 == 3) ? -1 : 1; }

// Finite sparse linear combination of Majorana words. Exact zeros are pruned;
// no epsilon pruning happens inside the algebra.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(cplx scalar) { add_term(0, scalar); }

  static AlgebraElement generator(int site) {
    AlgebraElement e;
    e.add_term(MajoranaWord{1} << site, 1.0);
    return e;
  }
  static AlgebraElement word(MajoranaWord w, cplx amp = 1.0) {
    AlgebraElement e;
    e.add_term(w, amp);
    return e;
  }
  static AlgebraElement identity() { return AlgebraElement(1.0); }

  void add_term(MajoranaWord w, cplx amp) {
    if (amp == cplx{}) return;
    auto [it, inserted] = terms_.try_emplace(w, amp);
    if (!inserted) {
      it->second += amp;
      if (it->second == cplx{}) terms_.erase(it);
    }
  }

  const std::map<MajoranaWord, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  cplx amplitude(MajoranaWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? cplx{} : it->second;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [w, a] : o.terms_) add_term(w, a);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [w, a] : o.terms_) add_term(w, -a);
    return *this;
  }
  AlgebraElement& operator*=(cplx s) {
    if (s == cplx{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, a] : terms_) a *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(cplx s, AlgebraElement x) { return x *= s; }

  double max_abs_amplitude() const {
    double m = 0.0;
    for (const auto& [w, a] : terms_) m = std::max(m, std::abs(a));
    return m;
  }

private:
  std::map<MajoranaWord, cplx> terms_;
};

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);
std::pair<AlgebraElement, AlgebraElement> grade_split(const AlgebraElement& a);

// Normalized tracial state: the amplitude of the identity word.
inline cplx trace(const AlgebraElement& a) { return a.amplitude(0); }

}  // namespace rp
