#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rp/hamiltonian.hpp"

using namespace rp;

namespace {

CouplingMatrix random_couplings(std::mt19937& rng, const Lattice& lat, TwistChoice zeta,
                                int entries) {
  PlusBasis basis(lat);
  std::uniform_int_distribution<int> pick(0, basis.size() - 1);
  std::normal_distribution<double> g;
  CouplingMatrix j;
  j.twist = zeta;
  for (int t = 0; t < entries; ++t)
    j.set(basis.index(pick(rng)), basis.index(pick(rng)), cplx(g(rng), g(rng)));
  return j;
}

// Make J Hermitian and supported on equal-parity pairs: an RI + GI model.
CouplingMatrix random_ri_gi(std::mt19937& rng, const Lattice& lat, TwistChoice zeta,
                            int entries) {
  CouplingMatrix raw = random_couplings(rng, lat, zeta, entries);
  CouplingMatrix j;
  j.twist = zeta;
  for (const auto& [key, value] : raw.entries) {
    auto [row, col] = key;
    if (word_length(row) % 2 != word_length(col) % 2) continue;
    j.set(row, col, j.at(row, col) + value);
    j.set(col, row, j.at(col, row) + std::conj(value));
  }
  return j;
}

}  // namespace

TEST_CASE("build and extract are mutually inverse") {
  std::mt19937 rng(41);
  for (TwistChoice zeta : {TwistChoice::plus_i(), TwistChoice::minus_i()}) {
    for (int half : {1, 2, 3}) {
      Lattice lat = Lattice::mirrored(half);
      for (int t = 0; t < 50; ++t) {
        CouplingMatrix j = random_couplings(rng, lat, zeta, 6);
        AlgebraElement h = build_hamiltonian(lat, j);
        CouplingMatrix back = extract_couplings(lat, zeta, h);
        double dev = 0.0;
        for (const auto& [key, value] : j.entries)
          dev = std::max(dev, std::abs(back.at(key.first, key.second) - value));
        for (const auto& [key, value] : back.entries)
          dev = std::max(dev, std::abs(j.at(key.first, key.second) - value));
        CHECK(dev <= 1e-12);
      }
    }
  }
}

TEST_CASE("decompose splits H into the E/V/J0 pieces") {
  Lattice lat = Lattice::mirrored(2);
  TwistChoice zeta = TwistChoice::plus_i();
  CouplingMatrix j;
  j.twist = zeta;
  BasisIndex a = BasisIndex{1} << 2;  // plus site 2
  BasisIndex b = BasisIndex{1} << 3;  // plus site 3
  j.set(0, 0, 2.5);        // energy constant
  j.set(a, 0, cplx(0, 1)); // one-sided
  j.set(0, a, cplx(0, -1));  // its Hermitian mirror (V* block)
  j.set(a, b, -1.0);       // across the plane
  CouplingDecomposition d = decompose(lat, j);
  CHECK(d.energy == cplx(2.5));
  CHECK(d.one_sided.size() == 1);
  CHECK(d.one_sided.at(a) == cplx(0, 1));
  CHECK(d.across.size() == 1);
  CHECK(d.across.at({a, b}) == cplx(-1.0));
  // H reassembles from the pieces
  AlgebraElement h = build_hamiltonian(lat, j);
  AlgebraElement sum = d.h_minus + d.h_zero + d.h_plus;
  sum.add_term(0, -d.energy);
  CHECK((sum - h).max_abs_amplitude() <= 1e-12);
  // with the V* block the Hermitian mirror of V, H+ = Theta(H-)
  CHECK((d.h_plus - reflect(lat, d.h_minus)).max_abs_amplitude() <= 1e-12);
}

TEST_CASE("property checks match operator-level definitions") {
  std::mt19937 rng(42);
  TwistChoice zeta = TwistChoice::plus_i();
  for (int half : {1, 2, 3}) {
    Lattice lat = Lattice::mirrored(half);
    for (int t = 0; t < 70; ++t) {
      CouplingMatrix j = random_couplings(rng, lat, zeta, 5);
      HamiltonianProperties p = check_properties(j);
      AlgebraElement h = build_hamiltonian(lat, j);

      bool op_ri = (reflect(lat, h) - h).max_abs_amplitude() <= 1e-10;
      bool op_herm = (adjoint(h) - h).max_abs_amplitude() <= 1e-10;
      auto [even, odd] = grade_split(h);
      bool op_gi = odd.max_abs_amplitude() <= 1e-15;

      CHECK(p.reflection_invariant == op_ri);
      CHECK(p.hermitian == op_herm);
      CHECK(p.gauge_invariant == op_gi);
    }
  }
}

TEST_CASE("RI+GI construction passes the checks and has Hermitian J0") {
  std::mt19937 rng(43);
  TwistChoice zeta = TwistChoice::plus_i();
  Lattice lat = Lattice::mirrored(3);
  for (int t = 0; t < 50; ++t) {
    CouplingMatrix j = random_ri_gi(rng, lat, zeta, 8);
    HamiltonianProperties p = check_properties(j);
    CHECK(p.reflection_invariant);
    CHECK(p.gauge_invariant);
    PlusBasis basis(lat);
    auto [labels, j0] = dense_across_block(basis, j);
    CHECK_NOTHROW(HermMatrix{j0});
  }
}

TEST_CASE("dense blocks agree with the sparse entries") {
  std::mt19937 rng(44);
  Lattice lat = Lattice::mirrored(2);
  TwistChoice zeta = TwistChoice::plus_i();
  CouplingMatrix j = random_couplings(rng, lat, zeta, 10);
  PlusBasis basis(lat);
  ComplexMatrix full = dense_full(basis, j);
  for (int r = 0; r < basis.size(); ++r)
    for (int c = 0; c < basis.size(); ++c)
      CHECK(full(r, c) == j.at(basis.index(r), basis.index(c)));
  auto [labels, j0] = dense_across_block(basis, j);
  REQUIRE(static_cast<int>(labels.size()) == basis.size() - 1);
  for (std::size_t r = 0; r < labels.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c)
      CHECK(j0(r, c) == j.at(labels[r], labels[c]));
}

TEST_CASE("coupling tuples outside the plus half are rejected") {
  Lattice lat = Lattice::mirrored(2);
  CouplingMatrix j;
  j.set(BasisIndex{1} << 0, 0, 1.0);  // site 0 is on the minus side
  CHECK_THROWS_AS(build_hamiltonian(lat, j), ConfigError);
}
