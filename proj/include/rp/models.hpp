#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rp/lattice.hpp"
#include "rp/spin.hpp"

namespace rp {

// Cubic lattice with half-integer coordinates, stored doubled so they stay
// integral: admissible values are the odd integers -(2L-1), ..., -1, 1, ...,
// 2L-1. The reflection negates coordinate 0.
struct CubicLattice {
  int dimension = 1;
  int extent = 1;  // L sites on each side of the plane in direction 0
  std::vector<std::vector<int>> coords;  // doubled coordinates, indexed by site
  Lattice lattice = Lattice::mirrored(1);

  int site_at(const std::vector<int>& doubled_coords) const;
};

// d in {1,2,3}, L >= 1 sites per side along direction 0, extent 2L in the
// transverse directions as well (so a chain of length 2L when d = 1).
CubicLattice build_cubic(int d, int L);

enum class ModelKind { ising, rotator, heisenberg, long_range };

enum class FieldParity { zero, symmetric, antisymmetric };

struct Bond {
  int site_a = 0;
  int site_b = 0;
  bool operator<(const Bond& o) const {
    return std::pair{site_a, site_b} < std::pair{o.site_a, o.site_b};
  }
};

struct ModelSpec {
  ModelKind kind = ModelKind::ising;
  std::array<double, 3> coupling{0.0, 0.0, 0.0};  // J^a per axis
  double exponent = 1.0;                          // s in f(x) = |x|^{-s}
  // Per-bond overrides of J^a; keys are canonical bonds (site_a < site_b).
  std::map<std::pair<Bond, int>, double> bond_couplings;
  // Site fields h^a_j, H gains -sum h^a_j sigma^a_j.
  std::map<std::pair<int, int>, double> fields;  // (site, axis) -> value
  std::array<FieldParity, 3> field_parity{FieldParity::zero, FieldParity::zero,
                                          FieldParity::zero};
};

// Assembles the nearest-neighbour (or long-range) coupling table
// H = -sum_bonds J^a_{jj'} sigma^a_j sigma^a_{j'} - sum_j h^a_j sigma^a_j and
// converts it to the reflected-pair form. Verifies the declared symmetries
// (theta-symmetric couplings, field parity) and throws a ConfigError naming a
// violating pair otherwise.
SpinCouplings build_model(const CubicLattice& cubic, const ModelSpec& spec);

std::string model_kind_name(ModelKind kind);

}  // namespace rp
