#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rp/clifford.hpp"
#include "rp/complex_matrix.hpp"
#include "rp/lattice.hpp"
#include "rp/report.hpp"

namespace rp {

// A Pauli string label: sorted (site, letter) pairs with distinct sites and
// letters in {1,2,3}. The empty label is the identity.
using SpinLabel = std::vector<std::pair<int, int>>;

inline int label_length(const SpinLabel& l) { return static_cast<int>(l.size()); }

// Finite sparse linear combination of Pauli strings.
class SpinElement {
public:
  SpinElement() = default;
  explicit SpinElement(cplx scalar) { add_term({}, scalar); }

  static SpinElement pauli_string(SpinLabel label, cplx amp = 1.0) {
    SpinElement e;
    e.add_term(std::move(label), amp);
    return e;
  }
  static SpinElement identity() { return SpinElement(1.0); }

  void add_term(SpinLabel label, cplx amp) {
    if (amp == cplx{}) return;
    auto [it, inserted] = terms_.try_emplace(std::move(label), amp);
    if (!inserted) {
      it->second += amp;
      if (it->second == cplx{}) terms_.erase(it);
    }
  }

  const std::map<SpinLabel, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  cplx amplitude(const SpinLabel& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? cplx{} : it->second;
  }

  SpinElement& operator+=(const SpinElement& o) {
    for (const auto& [l, a] : o.terms_) add_term(l, a);
    return *this;
  }
  SpinElement& operator-=(const SpinElement& o) {
    for (const auto& [l, a] : o.terms_) add_term(l, -a);
    return *this;
  }
  SpinElement& operator*=(cplx s) {
    if (s == cplx{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, a] : terms_) a *= s;
    return *this;
  }
  friend SpinElement operator+(SpinElement x, const SpinElement& y) { return x += y; }
  friend SpinElement operator-(SpinElement x, const SpinElement& y) { return x -= y; }
  friend SpinElement operator*(cplx s, SpinElement x) { return x *= s; }

  double max_abs_amplitude() const {
    double m = 0.0;
    for (const auto& [l, a] : terms_) m = std::max(m, std::abs(a));
    return m;
  }

private:
  std::map<SpinLabel, cplx> terms_;
};

SpinElement spin_mul(const SpinElement& a, const SpinElement& b);
inline cplx spin_trace(const SpinElement& a) { return a.amplitude({}); }
SpinElement spin_adjoint(const SpinElement& a);

// Standard reflection: sigma^a_j -> -sigma^a_{theta(j)}, antilinear.
SpinElement spin_reflect(const Lattice& lattice, const SpinElement& x);

// Per-site invertible 2x2 matrices defining the gauge automorphism
// alpha_g(X) = (prod g_j) X (prod g_j)^-1 acting sitewise.
class GaugeAssignment {
public:
  explicit GaugeAssignment(std::vector<ComplexMatrix> site_matrices);

  // Quarter-turn pair: exp(+i pi/4 sigma3) on the plus side,
  // exp(-i pi/4 sigma3) on the minus side. Induces the reflection fixing
  // sigma1, sigma2 and flipping sigma3.
  static GaugeAssignment rotator(const Lattice& lattice);

  const ComplexMatrix& matrix(int site) const { return g_[site]; }
  const ComplexMatrix& inverse(int site) const { return g_inv_[site]; }
  int size() const { return static_cast<int>(g_.size()); }

  // Reflection compatibility g_{theta(j)} = g_j^* required to build Theta'.
  void require_reflection_compatible(const Lattice& lattice) const;

private:
  std::vector<ComplexMatrix> g_, g_inv_;
};

SpinElement gauge_transform(const GaugeAssignment& g, const SpinElement& x);
SpinElement gauge_transform_inverse(const GaugeAssignment& g, const SpinElement& x);

// The reflection Theta' = alpha^-1 Theta alpha. An empty gauge means the
// standard reflection.
class SpinReflection {
public:
  explicit SpinReflection(const Lattice& lattice) : lattice_(&lattice) {}
  SpinReflection(const Lattice& lattice, GaugeAssignment gauge)
      : lattice_(&lattice), gauge_(std::move(gauge)) {
    gauge_->require_reflection_compatible(lattice);
  }

  bool is_standard() const { return !gauge_.has_value(); }
  SpinElement operator()(const SpinElement& x) const;

private:
  const Lattice* lattice_;
  std::optional<GaugeAssignment> gauge_;
};

// Coupling constants J^{AA'}_{theta(I) I'} keyed by (row, col) labels over
// the plus half; H = -sum J Sigma_{(theta(I),A)} Sigma_{(I',A')}.
struct SpinCouplings {
  std::map<std::pair<SpinLabel, SpinLabel>, cplx> entries;

  cplx at(const SpinLabel& row, const SpinLabel& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? cplx{} : it->second;
  }
  void set(SpinLabel row, SpinLabel col, cplx value) {
    if (value == cplx{})
      entries.erase({std::move(row), std::move(col)});
    else
      entries[{std::move(row), std::move(col)}] = value;
  }
};

SpinElement build_spin_hamiltonian(const Lattice& lattice, const SpinCouplings& j);
SpinCouplings extract_spin_couplings(const Lattice& lattice, const SpinElement& h);

// The matrix i^{k+k'} J0 over the labels with nonempty index sets. Throws a
// ConfigError diagnostic when the scaled full matrix is not Hermitian (H not
// reflection invariant); the criterion is then refused.
std::pair<std::vector<SpinLabel>, ComplexMatrix> spin_criterion_matrix(const SpinCouplings& j);

// Majorana image of the spin lattice: channels (j,1..4) per spin site.
Lattice kitaev_lattice(const Lattice& spin_lattice);
inline int kitaev_site(int spin_site, int channel) { return 4 * spin_site + channel - 1; }

AlgebraElement kitaev_map(const SpinElement& x, const Lattice& spin_lattice);
AlgebraElement chiral_projection(const Lattice& spin_lattice);

// Direct tensor-product representation, one qubit per spin site.
class SpinRepresentation {
public:
  explicit SpinRepresentation(const Lattice& lattice);
  const Lattice& lattice() const { return *lattice_; }
  int dimension() const { return 1 << lattice_->size(); }
  ComplexMatrix represent(const SpinElement& x) const;

private:
  const Lattice* lattice_;
  std::vector<std::array<ComplexMatrix, 3>> site_images_;
};

cplx spin_boltzmann(const SpinElement& a, const SpinElement& h, double beta,
                    const SpinRepresentation& rep);
cplx spin_gibbs(const SpinElement& a, const SpinElement& h, double beta,
                const SpinRepresentation& rep);

struct SpinGramMatrix {
  std::vector<SpinLabel> basis_labels;  // all Pauli strings on the plus half
  ComplexMatrix entries;
  cplx partition_sum;
};

// Gram matrix of (X, Y) -> omega(Theta(X) Y) over the Pauli strings
// supported on the plus half; ordinary product, the spin algebra is purely
// even.
SpinGramMatrix spin_gram_matrix(const SpinElement& h, double beta,
                                const SpinRepresentation& rep,
                                const SpinReflection& reflection, bool normalized);

std::string render_spin_witness(const std::vector<SpinLabel>& labels,
                                const std::vector<cplx>& witness, const Lattice& lattice);

RPReport spin_rp_oracle(const SpinElement& h, const SpinReflection& reflection, double beta,
                        const SpinRepresentation& rep, double tol);

// Graded-lex enumeration of the Pauli strings supported on the plus half.
std::vector<SpinLabel> plus_spin_basis(const Lattice& lattice);

}  // namespace rp
