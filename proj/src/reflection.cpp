#include "rp/reflection.hpp"

#include <algorithm>
#include <bit>

namespace rp {

namespace {

std::vector<int> mask_sites(MajoranaWord w) {
  std::vector<int> sites;
  while (w) {
    sites.push_back(std::countr_zero(w));
    w &= w - 1;
  }
  return sites;
}

// Sign of rearranging the canonical ascending word into the factored form
// (minus part)(plus part): one inversion per plus site preceding a minus
// site in the global order.
int split_sign(MajoranaWord w, uint64_t plus_mask) {
  int inversions = 0;
  MajoranaWord minus_part = w & ~plus_mask;
  while (minus_part) {
    const int m = std::countr_zero(minus_part);
    const MajoranaWord below = (MajoranaWord{1} << m) - 1;
    inversions += std::popcount(w & plus_mask & below);
    minus_part &= minus_part - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

// Theta(C_I) for I in P_+, as (canonical word, sign) over the minus half.
std::pair<MajoranaWord, int> reflected_tuple_word(const Lattice& lattice, BasisIndex idx) {
  std::vector<int> seq;
  for (int s : mask_sites(idx)) seq.push_back(lattice.partner(s));
  return canonicalize(seq);
}

}  // namespace

PlusBasis::PlusBasis(const Lattice& lattice) {
  const auto& plus = lattice.plus_sites();
  const int m = static_cast<int>(plus.size());
  indices_.reserve(size_t{1} << m);
  for (uint64_t sub = 0; sub < (uint64_t{1} << m); ++sub) {
    BasisIndex idx = 0;
    for (int k = 0; k < m; ++k)
      if (sub >> k & 1) idx |= MajoranaWord{1} << plus[k];
    indices_.push_back(idx);
  }
  std::sort(indices_.begin(), indices_.end(), [](BasisIndex a, BasisIndex b) {
    const int ka = word_length(a), kb = word_length(b);
    if (ka != kb) return ka < kb;
    while (a && b) {
      const int sa = std::countr_zero(a), sb = std::countr_zero(b);
      if (sa != sb) return sa < sb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  for (int pos = 0; pos < static_cast<int>(indices_.size()); ++pos)
    position_[indices_[pos]] = pos;
}

AlgebraElement reflect(const Lattice& lattice, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, amp] : a.terms()) {
    if (w & ~lattice.full_mask()) throw ConfigError("element references sites outside the lattice");
    std::vector<int> seq;
    for (int s : mask_sites(w)) seq.push_back(lattice.partner(s));
    auto [word, sign] = canonicalize(seq);
    r.add_term(word, static_cast<double>(sign) * std::conj(amp));
  }
  return r;
}

AlgebraElement twisted_product(const Lattice& lattice, TwistChoice zeta,
                               const AlgebraElement& a, const AlgebraElement& b) {
  const uint64_t plus = lattice.plus_mask();
  AlgebraElement r;
  for (const auto& [wa, amp_a] : a.terms())
    for (const auto& [wb, amp_b] : b.terms()) {
      const long a_minus = word_length(wa & ~plus) & 1;
      const long a_plus = word_length(wa & plus) & 1;
      const long b_minus = word_length(wb & ~plus) & 1;
      const long b_plus = word_length(wb & plus) & 1;
      const cplx phase = zeta.pow(a_minus * b_plus - a_plus * b_minus);
      r.add_term(wa ^ wb,
                 phase * static_cast<double>(product_sign(wa, wb)) * amp_a * amp_b);
    }
  return r;
}

AlgebraElement basis_element(const Lattice& lattice, TwistChoice zeta, BasisIndex row,
                             BasisIndex col) {
  auto [theta_word, theta_sign] = reflected_tuple_word(lattice, row);
  const cplx phase = zeta.pow(long(word_length(row) & 1) * long(word_length(col) & 1));
  // Theta(C_row) and C_col live on opposite halves, so the product word is
  // the disjoint union; its sign relative to the factored order is absorbed
  // by product_sign through mul.
  return mul(AlgebraElement::word(theta_word, phase * static_cast<double>(theta_sign)),
             AlgebraElement::word(col));
}

BasisCoefficients basis_expand(const Lattice& lattice, TwistChoice zeta,
                               const AlgebraElement& a) {
  const uint64_t plus = lattice.plus_mask();
  BasisCoefficients coeffs;
  std::map<BasisIndex, std::pair<MajoranaWord, int>> theta_cache;
  for (const auto& [w, amp] : a.terms()) {
    if (w & ~lattice.full_mask()) throw ConfigError("element references sites outside the lattice");
    const MajoranaWord w_minus = w & ~plus;
    const BasisIndex col = w & plus;
    BasisIndex row = 0;
    for (int s : mask_sites(w_minus)) row |= MajoranaWord{1} << lattice.partner(s);
    auto it = theta_cache.find(row);
    if (it == theta_cache.end())
      it = theta_cache.emplace(row, reflected_tuple_word(lattice, row)).first;
    // Theta(C_row) o C_col = zeta^{|row||col|} * theta_sign * (w_minus)(w_plus),
    // and the canonical word w equals split_sign * (w_minus)(w_plus).
    const cplx basis_amp = zeta.pow(long(word_length(row) & 1) * long(word_length(col) & 1)) *
                           static_cast<double>(it->second.second * split_sign(w, plus));
    coeffs[{row, col}] = amp / basis_amp;
  }
  return coeffs;
}

AlgebraElement basis_assemble(const Lattice& lattice, TwistChoice zeta,
                              const BasisCoefficients& coeffs) {
  AlgebraElement a;
  for (const auto& [key, amp] : coeffs) {
    if (amp == cplx{}) continue;
    AlgebraElement e = basis_element(lattice, zeta, key.first, key.second);
    a += amp * e;
  }
  return a;
}

}  // namespace rp
