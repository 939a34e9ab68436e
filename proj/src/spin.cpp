#include "rp/spin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rp/linalg.hpp"
#include "rp/matrix_rep.hpp"
#include "rp/parallel.hpp"

namespace rp {

namespace {

// sigma^a sigma^b = delta^{ab} I + i eps_{abc} sigma^c, returned as
// (coefficient, letter) with letter 0 meaning the identity.
std::pair<cplx, int> pauli_product(int a, int b) {
  if (a == b) return {1.0, 0};
  int c = 6 - a - b;  // the remaining letter
  // eps_{abc} = +1 for the cyclic pairs (1,2),(2,3),(3,1)
  bool cyclic = (b == a % 3 + 1);
  return {cplx(0.0, cyclic ? 1.0 : -1.0), c};
}

void mul_labels(const SpinLabel& x, const SpinLabel& y, cplx amp, SpinElement& out) {
  SpinLabel prod;
  prod.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      prod.push_back(x[i++]);
    } else if (x[i].first > y[j].first) {
      prod.push_back(y[j++]);
    } else {
      auto [coeff, letter] = pauli_product(x[i].second, y[j].second);
      amp *= coeff;
      if (letter != 0) prod.emplace_back(x[i].first, letter);
      ++i;
      ++j;
    }
  }
  prod.insert(prod.end(), x.begin() + i, x.end());
  prod.insert(prod.end(), y.begin() + j, y.end());
  out.add_term(std::move(prod), amp);
}

}  // namespace

SpinElement spin_mul(const SpinElement& a, const SpinElement& b) {
  SpinElement out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) mul_labels(la, lb, ca * cb, out);
  return out;
}

SpinElement spin_adjoint(const SpinElement& a) {
  SpinElement out;
  for (const auto& [l, c] : a.terms()) out.add_term(l, std::conj(c));
  return out;
}

SpinElement spin_reflect(const Lattice& lattice, const SpinElement& x) {
  SpinElement out;
  for (const auto& [l, c] : x.terms()) {
    SpinLabel img;
    img.reserve(l.size());
    for (const auto& [site, letter] : l) img.emplace_back(lattice.partner(site), letter);
    std::sort(img.begin(), img.end());
    double sign = (l.size() % 2 == 0) ? 1.0 : -1.0;
    out.add_term(std::move(img), sign * std::conj(c));
  }
  return out;
}

GaugeAssignment::GaugeAssignment(std::vector<ComplexMatrix> site_matrices)
    : g_(std::move(site_matrices)) {
  g_inv_.reserve(g_.size());
  for (const auto& m : g_) {
    if (m.rows() != 2 || m.cols() != 2)
      throw ConfigError("gauge matrices must be 2x2");
    cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det) < 1e-12) throw ConfigError("gauge matrix is singular");
    ComplexMatrix inv(2, 2);
    inv(0, 0) = m(1, 1) / det;
    inv(0, 1) = -m(0, 1) / det;
    inv(1, 0) = -m(1, 0) / det;
    inv(1, 1) = m(0, 0) / det;
    g_inv_.push_back(std::move(inv));
  }
}

GaugeAssignment GaugeAssignment::rotator(const Lattice& lattice) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix plus(2, 2), minus(2, 2);  // exp(+-i pi/4 sigma3)
  plus(0, 0) = cplx(r, r);
  plus(1, 1) = cplx(r, -r);
  minus(0, 0) = cplx(r, -r);
  minus(1, 1) = cplx(r, r);
  std::vector<ComplexMatrix> gs;
  gs.reserve(lattice.size());
  for (int j = 0; j < lattice.size(); ++j)
    gs.push_back(lattice.on_plus_side(j) ? plus : minus);
  return GaugeAssignment(std::move(gs));
}

void GaugeAssignment::require_reflection_compatible(const Lattice& lattice) const {
  if (size() != lattice.size())
    throw ConfigError("gauge assignment size does not match the lattice");
  for (int j = 0; j < lattice.size(); ++j) {
    const ComplexMatrix& a = g_[lattice.partner(j)];
    ComplexMatrix b = g_[j].adjoint();
    b -= a;
    if (b.max_abs() > 1e-12)
      throw ConfigError("gauge assignment is not reflection compatible: need g_{theta(j)} = g_j^*");
  }
}

namespace {

SpinElement conjugate_sitewise(const std::vector<ComplexMatrix>& left,
                               const std::vector<ComplexMatrix>& right, const SpinElement& x) {
  // Per site, expand g sigma^a g^-1 = sum_b e_{ab} sigma^b; the identity
  // component vanishes because conjugation preserves the trace.
  SpinElement out;
  for (const auto& [l, c] : x.terms()) {
    SpinElement term(c);
    for (const auto& [site, letter] : l) {
      ComplexMatrix img = left[site] * pauli(letter) * right[site];
      SpinElement factor;
      for (int b = 1; b <= 3; ++b) {
        cplx e = pauli(b).trace_product(img) * 0.5;
        if (std::abs(e) > 1e-15) factor.add_term({{site, b}}, e);
      }
      term = spin_mul(term, factor);
    }
    out += term;
  }
  return out;
}

}  // namespace

SpinElement gauge_transform(const GaugeAssignment& g, const SpinElement& x) {
  std::vector<ComplexMatrix> left, right;
  for (int j = 0; j < g.size(); ++j) {
    left.push_back(g.matrix(j));
    right.push_back(g.inverse(j));
  }
  return conjugate_sitewise(left, right, x);
}

SpinElement gauge_transform_inverse(const GaugeAssignment& g, const SpinElement& x) {
  std::vector<ComplexMatrix> left, right;
  for (int j = 0; j < g.size(); ++j) {
    left.push_back(g.inverse(j));
    right.push_back(g.matrix(j));
  }
  return conjugate_sitewise(left, right, x);
}

SpinElement SpinReflection::operator()(const SpinElement& x) const {
  if (!gauge_) return spin_reflect(*lattice_, x);
  return gauge_transform_inverse(*gauge_, spin_reflect(*lattice_, gauge_transform(*gauge_, x)));
}

SpinElement build_spin_hamiltonian(const Lattice& lattice, const SpinCouplings& j) {
  SpinElement h;
  for (const auto& [key, value] : j.entries) {
    const auto& [row, col] = key;
    for (const SpinLabel* l : {&row, &col})
      for (const auto& [site, letter] : *l) {
        if (site < 0 || site >= lattice.size() || !lattice.on_plus_side(site))
          throw ConfigError("spin coupling label lies outside the plus half");
        if (letter < 1 || letter > 3) throw ConfigError("Pauli letter must be 1, 2 or 3");
      }
    SpinLabel reflected_row;
    reflected_row.reserve(row.size());
    for (const auto& [site, letter] : row)
      reflected_row.emplace_back(lattice.partner(site), letter);
    std::sort(reflected_row.begin(), reflected_row.end());
    SpinElement term = spin_mul(SpinElement::pauli_string(reflected_row),
                                SpinElement::pauli_string(col));
    term *= -value;
    h += term;
  }
  return h;
}

SpinCouplings extract_spin_couplings(const Lattice& lattice, const SpinElement& h) {
  SpinCouplings j;
  for (const auto& [l, c] : h.terms()) {
    SpinLabel row, col;
    for (const auto& [site, letter] : l) {
      if (lattice.on_plus_side(site))
        col.emplace_back(site, letter);
      else
        row.emplace_back(lattice.partner(site), letter);
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    // The two halves act on disjoint sites, so Sigma_{(theta(row),A)}
    // Sigma_{(col,A')} is exactly the Pauli string with amplitude 1.
    j.set(std::move(row), std::move(col), -c);
  }
  return j;
}

std::pair<std::vector<SpinLabel>, ComplexMatrix> spin_criterion_matrix(const SpinCouplings& j) {
  std::vector<SpinLabel> all, inner;
  for (const auto& [key, value] : j.entries) {
    for (const SpinLabel* l : {&key.first, &key.second})
      if (std::find(all.begin(), all.end(), *l) == all.end()) all.push_back(*l);
    // Only labels occurring in a genuine across-the-plane entry enter the
    // criterion matrix; labels paired solely with the empty tuple contribute
    // zero rows that say nothing about positivity.
    if (!key.first.empty() && !key.second.empty())
      for (const SpinLabel* l : {&key.first, &key.second})
        if (std::find(inner.begin(), inner.end(), *l) == inner.end()) inner.push_back(*l);
  }
  auto graded_lex = [](const SpinLabel& a, const SpinLabel& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::sort(all.begin(), all.end(), graded_lex);
  std::sort(inner.begin(), inner.end(), graded_lex);

  auto scaled = [&](const SpinLabel& r, const SpinLabel& c) {
    cplx pw = 1.0;
    switch ((r.size() + c.size()) % 4) {
      case 1: pw = cplx(0, 1); break;
      case 2: pw = -1.0; break;
      case 3: pw = cplx(0, -1); break;
    }
    return pw * j.at(r, c);
  };

  double scale = 0.0;
  for (const auto& [key, value] : j.entries) scale = std::max(scale, std::abs(value));
  for (const auto& r : all)
    for (const auto& c : all)
      if (std::abs(scaled(r, c) - std::conj(scaled(c, r))) > 1e-12 * std::max(1.0, scale))
        throw ConfigError(
            "H is not reflection invariant: i^{k+k'} J is not Hermitian; "
            "the spectral criterion does not apply");

  ComplexMatrix m(static_cast<int>(inner.size()), static_cast<int>(inner.size()));
  for (std::size_t r = 0; r < inner.size(); ++r)
    for (std::size_t c = 0; c < inner.size(); ++c) m(r, c) = scaled(inner[r], inner[c]);
  return {std::move(inner), std::move(m)};
}

Lattice kitaev_lattice(const Lattice& spin_lattice) {
  int n = spin_lattice.size();
  if (4 * n > 64) throw ConfigError("Kitaev image exceeds the 64 generator cap");
  std::vector<std::string> names;
  std::vector<int> partner;
  std::vector<bool> plus;
  for (int j = 0; j < n; ++j)
    for (int a = 1; a <= 4; ++a) {
      names.push_back(spin_lattice.name(j) + "^" + std::to_string(a));
      partner.push_back(kitaev_site(spin_lattice.partner(j), a));
      plus.push_back(spin_lattice.on_plus_side(j));
    }
  return Lattice(std::move(names), std::move(partner), std::move(plus));
}

AlgebraElement kitaev_map(const SpinElement& x, const Lattice& spin_lattice) {
  AlgebraElement out;
  for (const auto& [l, c] : x.terms()) {
    AlgebraElement term = AlgebraElement(c);
    for (const auto& [site, letter] : l) {
      AlgebraElement hat = mul(AlgebraElement::generator(kitaev_site(site, letter)),
                               AlgebraElement::generator(kitaev_site(site, 4)));
      hat *= cplx(0, 1);
      term = mul(term, hat);
    }
    out += term;
  }
  return out;
}

AlgebraElement chiral_projection(const Lattice& spin_lattice) {
  AlgebraElement p = AlgebraElement::identity();
  for (int j = 0; j < spin_lattice.size(); ++j) {
    AlgebraElement factor = AlgebraElement(cplx(0.5));
    factor.add_term((MajoranaWord{0xF} << kitaev_site(j, 1)), 0.5);
    p = mul(p, factor);
  }
  return p;
}

SpinRepresentation::SpinRepresentation(const Lattice& lattice) : lattice_(&lattice) {
  int n = lattice.size();
  if (n > 10) throw ConfigError("spin oracle supports at most 10 sites");
  site_images_.resize(n);
  for (int j = 0; j < n; ++j)
    for (int a = 1; a <= 3; ++a) {
      ComplexMatrix m = ComplexMatrix::identity(1);
      for (int k = 0; k < n; ++k) m = kron(m, k == j ? pauli(a) : pauli(0));
      site_images_[j][a - 1] = std::move(m);
    }
}

ComplexMatrix SpinRepresentation::represent(const SpinElement& x) const {
  int d = dimension();
  ComplexMatrix out(d, d);
  for (const auto& [l, c] : x.terms()) {
    ComplexMatrix term = ComplexMatrix::identity(d);
    for (const auto& [site, letter] : l) {
      if (site < 0 || site >= lattice_->size())
        throw ConfigError("spin element uses a site outside the lattice");
      term = term * site_images_[site][letter - 1];
    }
    term *= c;
    out += term;
  }
  return out;
}

cplx spin_boltzmann(const SpinElement& a, const SpinElement& h, double beta,
                    const SpinRepresentation& rep) {
  ComplexMatrix mh = rep.represent(h);
  mh *= -beta;
  ComplexMatrix weight = matrix_exp(mh, true);
  return rep.represent(a).trace_product(weight) / static_cast<double>(rep.dimension());
}

cplx spin_gibbs(const SpinElement& a, const SpinElement& h, double beta,
                const SpinRepresentation& rep) {
  cplx z = spin_boltzmann(SpinElement::identity(), h, beta, rep);
  if (std::abs(z) < 1e-12) throw NumericalError("partition sum vanishes");
  return spin_boltzmann(a, h, beta, rep) / z;
}

std::vector<SpinLabel> plus_spin_basis(const Lattice& lattice) {
  std::vector<int> plus = lattice.plus_sites();
  std::sort(plus.begin(), plus.end());
  std::vector<SpinLabel> out{{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= plus.size(); ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (int site : plus) {
        if (!out[i].empty() && site <= out[i].back().first) continue;
        for (int a = 1; a <= 3; ++a) {
          SpinLabel l = out[i];
          l.emplace_back(site, a);
          out.push_back(std::move(l));
        }
      }
    start = end;
  }
  // Within each length the construction is lex on (site, letter) already
  // because extensions preserve order; sort defensively all the same.
  std::stable_sort(out.begin(), out.end(), [](const SpinLabel& a, const SpinLabel& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SpinGramMatrix spin_gram_matrix(const SpinElement& h, double beta,
                                const SpinRepresentation& rep,
                                const SpinReflection& reflection, bool normalized) {
  SpinGramMatrix g;
  g.basis_labels = plus_spin_basis(rep.lattice());
  int n = static_cast<int>(g.basis_labels.size());
  int d = rep.dimension();

  ComplexMatrix mh = rep.represent(h);
  mh *= -beta;
  ComplexMatrix weight = matrix_exp(mh, true);
  g.partition_sum = weight.trace() / static_cast<double>(d);
  if (normalized) {
    if (std::abs(g.partition_sum) < 1e-12) throw NumericalError("partition sum vanishes");
    weight *= 1.0 / g.partition_sum;
  }

  std::vector<ComplexMatrix> reflected(n), plain(n);
  parallel_for(n, [&](int i) {
    plain[i] = rep.represent(SpinElement::pauli_string(g.basis_labels[i]));
    reflected[i] = rep.represent(reflection(SpinElement::pauli_string(g.basis_labels[i])));
  });

  g.entries = ComplexMatrix(n, n);
  parallel_for(n, [&](int r) {
    for (int c = 0; c < n; ++c) {
      ComplexMatrix prod = reflected[r] * plain[c];
      g.entries(r, c) = prod.trace_product(weight) / static_cast<double>(d);
    }
  });
  return g;
}

std::string render_spin_witness(const std::vector<SpinLabel>& labels,
                                const std::vector<cplx>& witness, const Lattice& lattice) {
  std::ostringstream os;
  static const char* letters = "xyz";
  bool first = true;
  for (std::size_t i = 0; i < labels.size() && i < witness.size(); ++i) {
    if (std::abs(witness[i]) < 1e-12) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << witness[i].real();
    if (witness[i].imag() >= 0) os << "+";
    os << witness[i].imag() << "i)*";
    if (labels[i].empty()) {
      os << "I";
    } else {
      bool inner_first = true;
      for (const auto& [site, letter] : labels[i]) {
        if (!inner_first) os << ".";
        inner_first = false;
        os << "s" << letters[letter - 1] << "[" << lattice.name(site) << "]";
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

RPReport spin_rp_oracle(const SpinElement& h, const SpinReflection& reflection, double beta,
                        const SpinRepresentation& rep, double tol) {
  SpinGramMatrix g = spin_gram_matrix(h, beta, rep, reflection, false);
  PsdCertificate cert = psd_check(HermMatrix(g.entries), tol);
  RPReport report;
  report.provenance = "oracle";
  report.rp = cert.psd;
  report.marginal = cert.marginal;
  report.min_eigenvalue = cert.min_eigenvalue;
  report.tolerance = cert.tolerance_used;
  report.beta = beta;
  report.partition_sum = g.partition_sum.real();
  if (!cert.witness.empty()) {
    report.witness = render_spin_witness(g.basis_labels, cert.witness, rep.lattice());
    cplx val = 0.0;
    int n = static_cast<int>(cert.witness.size());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        val += std::conj(cert.witness[r]) * g.entries(r, c) * cert.witness[c];
    report.witness_value = val.real();
  }
  return report;
}

}  // namespace rp
