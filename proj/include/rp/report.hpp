#pragma once

#include <complex>
#include <string>
#include <vector>

namespace rp {

// Verdict surface shared by the spectral criterion and the brute-force
// oracles.
struct RPReport {
  std::string provenance;  // "criterion" or "oracle"
  bool rp = false;
  bool marginal = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  double beta = 0.0;                       // oracle runs only
  std::complex<double> partition_sum{};    // oracle runs only
  std::string witness;                     // rendered witness element, when not rp
  double witness_value = 0.0;              // omega(Theta(A) o A) for the witness
};

}  // namespace rp
