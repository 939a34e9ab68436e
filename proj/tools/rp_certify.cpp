#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rp/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rp-certify: reflection positivity certification for Majorana and spin systems"};
  app.require_subcommand(1);

  bool json_output = false;
  double tol = 0.0;
  bool tol_set = false;
  std::vector<double> betas;
  std::string zeta;

  app.add_flag("--json", json_output, "emit the machine-readable JSON report");
  app.add_option("--tol", tol, "PSD tolerance (relative to the matrix norm)")
      ->each([&](const std::string&) { tol_set = true; });
  app.add_option("--beta", betas, "inverse temperature grid (overrides the config)");
  app.add_option("--zeta", zeta, "twist choice, +i or -i")
      ->check(CLI::IsMember({"+i", "-i"}));

  std::string check_path, oracle_path, spectrum_path, demo_name;
  CLI::App* check = app.add_subcommand("check", "run the spectral criterion (and oracle in mode both)");
  check->add_option("config", check_path, "config file")->required();
  CLI::App* oracle = app.add_subcommand("oracle", "run the brute-force Gram-matrix oracle");
  oracle->add_option("config", oracle_path, "config file")->required();
  CLI::App* spectrum = app.add_subcommand("spectrum", "list criterion-matrix eigenvalues");
  spectrum->add_option("config", spectrum_path, "config file")->required();
  CLI::App* demo = app.add_subcommand("demo", "run a bundled demo scenario by name");
  demo->add_option("name", demo_name, "one of the bundled scenario names")->required();

  // accept the global flags after the subcommand too
  for (CLI::App* sub : {check, oracle, spectrum, demo}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  rp::Overrides overrides;
  if (tol_set) overrides.tolerance = tol;
  overrides.betas = betas;
  if (!zeta.empty()) overrides.zeta = zeta;

  std::string cmd, arg;
  if (check->parsed()) cmd = "check", arg = check_path;
  if (oracle->parsed()) cmd = "oracle", arg = oracle_path;
  if (spectrum->parsed()) cmd = "spectrum", arg = spectrum_path;
  if (demo->parsed()) cmd = "demo", arg = demo_name;

  rp::RunResult result = rp::run_command(cmd, arg, overrides);
  std::cout << (json_output ? result.json : result.text);
  return result.exit_code;
}
