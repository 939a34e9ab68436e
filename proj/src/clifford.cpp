#include "rp/clifford.hpp"

namespace rp {

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, amp_a] : a.terms())
    for (const auto& [wb, amp_b] : b.terms())
      r.add_term(wa ^ wb, static_cast<double>(product_sign(wa, wb)) * amp_a * amp_b);
  return r;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, amp] : a.terms())
    r.add_term(w, static_cast<double>(adjoint_sign(word_length(w))) * std::conj(amp));
  return r;
}

std::pair<AlgebraElement, AlgebraElement> grade_split(const AlgebraElement& a) {
  AlgebraElement even, odd;
  for (const auto& [w, amp] : a.terms())
    (word_is_odd(w) ? odd : even).add_term(w, amp);
  return {even, odd};
}

}  // namespace rp
