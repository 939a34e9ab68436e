#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rp/hamiltonian.hpp"
#include "rp/models.hpp"
#include "rp/spin.hpp"

namespace rp {

enum class AlgebraKind { majorana, spin };
enum class RunMode { criterion, oracle, both };
enum class ReflectionKind { standard, rotator };

// Parsed run configuration; see configs/README notes for the file format.
struct RunConfig {
  AlgebraKind algebra = AlgebraKind::majorana;
  RunMode mode = RunMode::both;
  ReflectionKind reflection = ReflectionKind::standard;
  TwistChoice zeta = TwistChoice::plus_i();
  std::vector<double> betas{1.0};
  double tolerance = 1e-9;

  Lattice lattice = Lattice::mirrored(1);
  CouplingMatrix majorana_couplings;  // algebra = majorana
  SpinCouplings spin_couplings;       // algebra = spin

  // Set when the couplings came from a named model section.
  std::optional<ModelKind> model_kind;
  std::optional<CubicLattice> cubic;
  std::optional<ModelSpec> model_spec;
};

struct Overrides {
  std::optional<double> tolerance;
  std::vector<double> betas;  // non-empty replaces the config grid
  std::optional<std::string> zeta;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

struct RunResult {
  int exit_code = 1;  // 0 = RP certified, 2 = not RP, 1 = error/diagnostic
  std::string text;   // human-readable report
  std::string json;   // machine-readable report
};

// cmd is one of check, oracle, spectrum; argument is a config path.
// cmd demo takes a bundled scenario name instead.
RunResult run_command(const std::string& cmd, const std::string& argument,
                      const Overrides& overrides = {});

// Bundled demo scenario names (resolved against the configs directory).
std::vector<std::string> demo_names();

}  // namespace rp
