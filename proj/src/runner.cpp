#include "rp/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rp/matrix_rep.hpp"

#ifndef RP_CONFIG_DIR
#define RP_CONFIG_DIR "configs"
#endif

namespace rp {

namespace {

using nlohmann::json;

cplx parse_complex(const json& v) {
  if (v.is_number()) return cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return cplx(v[0].get<double>(), v[1].get<double>());
  throw ConfigError("complex values must be numbers or [re, im] pairs");
}

std::vector<double> parse_betas(const json& v) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<double>());
  } else {
    throw ConfigError("beta must be a number or an array of numbers");
  }
  for (double b : out)
    if (!(b > 0.0)) throw ConfigError("beta values must be positive");
  if (out.empty()) throw ConfigError("beta grid is empty");
  return out;
}

Lattice parse_lattice(const json& v) {
  if (v.contains("half_size")) return Lattice::mirrored(v.at("half_size").get<int>());
  std::vector<std::string> names = v.at("names").get<std::vector<std::string>>();
  std::vector<int> partner = v.at("partner").get<std::vector<int>>();
  std::vector<bool> plus = v.at("plus").get<std::vector<bool>>();
  return Lattice(std::move(names), std::move(partner), std::move(plus));
}

int site_by_name(const Lattice& lattice, const std::string& name) {
  for (int i = 0; i < lattice.size(); ++i)
    if (lattice.name(i) == name) return i;
  throw ConfigError("unknown site name: " + name);
}

BasisIndex parse_tuple(const Lattice& lattice, const json& v) {
  BasisIndex idx = 0;
  for (const auto& n : v) {
    int site = site_by_name(lattice, n.get<std::string>());
    if (!lattice.on_plus_side(site))
      throw ConfigError("coupling tuples must name plus-side sites, got " +
                        n.get<std::string>());
    BasisIndex bit = BasisIndex{1} << site;
    if (idx & bit) throw ConfigError("coupling tuple repeats site " + n.get<std::string>());
    idx |= bit;
  }
  return idx;
}

SpinLabel parse_spin_label(const Lattice& lattice, const json& v) {
  SpinLabel l;
  for (const auto& pair : v) {
    if (!pair.is_array() || pair.size() != 2)
      throw ConfigError("spin labels are arrays of [site, axis] pairs");
    int site = site_by_name(lattice, pair[0].get<std::string>());
    if (!lattice.on_plus_side(site))
      throw ConfigError("spin coupling labels must name plus-side sites");
    int axis = pair[1].get<int>();
    if (axis < 1 || axis > 3) throw ConfigError("Pauli axis must be 1, 2 or 3");
    l.emplace_back(site, axis);
  }
  std::sort(l.begin(), l.end());
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i].first == l[i - 1].first) throw ConfigError("spin label repeats a site");
  return l;
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "ising") return ModelKind::ising;
  if (s == "rotator") return ModelKind::rotator;
  if (s == "heisenberg") return ModelKind::heisenberg;
  if (s == "long_range") return ModelKind::long_range;
  throw ConfigError("unknown model kind: " + s);
}

FieldParity parse_parity(const std::string& s) {
  if (s == "zero") return FieldParity::zero;
  if (s == "symmetric") return FieldParity::symmetric;
  if (s == "antisymmetric") return FieldParity::antisymmetric;
  throw ConfigError("field parity must be zero, symmetric or antisymmetric");
}

std::vector<int> parse_coords(const json& v) {
  std::vector<int> doubled;
  for (const auto& x : v) {
    double c = x.get<double>();
    int d = static_cast<int>(std::lround(2.0 * c));
    if (std::abs(2.0 * c - d) > 1e-9 || d % 2 == 0)
      throw ConfigError("lattice coordinates must be half-odd-integers");
    doubled.push_back(d);
  }
  return doubled;
}

void parse_model_section(const json& m, RunConfig& cfg) {
  ModelSpec spec;
  spec.kind = parse_model_kind(m.at("kind").get<std::string>());
  int d = m.value("dimension", 1);
  int L = m.value("extent", 1);
  CubicLattice cubic = build_cubic(d, L);

  if (m.contains("coupling")) {
    const auto& c = m.at("coupling");
    if (!c.is_array() || c.size() != 3)
      throw ConfigError("model coupling must be an array [J1, J2, J3]");
    for (int a = 0; a < 3; ++a) spec.coupling[a] = c[a].get<double>();
  }
  spec.exponent = m.value("exponent", 1.0);
  if (m.contains("field_parity")) {
    const auto& p = m.at("field_parity");
    if (!p.is_array() || p.size() != 3)
      throw ConfigError("field_parity must list three entries");
    for (int a = 0; a < 3; ++a) spec.field_parity[a] = parse_parity(p[a].get<std::string>());
  }
  for (const auto& f : m.value("fields", json::array())) {
    int site = cubic.site_at(parse_coords(f.at("site")));
    spec.fields[{site, f.at("axis").get<int>()}] = f.at("value").get<double>();
  }
  for (const auto& b : m.value("bond_couplings", json::array())) {
    int sa = cubic.site_at(parse_coords(b.at("a")));
    int sb = cubic.site_at(parse_coords(b.at("b")));
    if (sa > sb) std::swap(sa, sb);
    spec.bond_couplings[{Bond{sa, sb}, b.at("axis").get<int>()}] = b.at("value").get<double>();
  }

  cfg.lattice = cubic.lattice;
  cfg.spin_couplings = build_model(cubic, spec);
  cfg.model_kind = spec.kind;
  cfg.cubic = std::move(cubic);
  cfg.model_spec = std::move(spec);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  RunConfig cfg;
  std::string algebra = doc.value("algebra", "majorana");
  if (algebra == "majorana")
    cfg.algebra = AlgebraKind::majorana;
  else if (algebra == "spin")
    cfg.algebra = AlgebraKind::spin;
  else
    throw ConfigError("algebra must be majorana or spin");

  std::string mode = doc.value("mode", "both");
  if (mode == "criterion")
    cfg.mode = RunMode::criterion;
  else if (mode == "oracle")
    cfg.mode = RunMode::oracle;
  else if (mode == "both")
    cfg.mode = RunMode::both;
  else
    throw ConfigError("mode must be criterion, oracle or both");

  std::string refl = doc.value("reflection", "standard");
  if (refl == "standard")
    cfg.reflection = ReflectionKind::standard;
  else if (refl == "rotator")
    cfg.reflection = ReflectionKind::rotator;
  else
    throw ConfigError("reflection must be standard or rotator");
  if (cfg.reflection == ReflectionKind::rotator && cfg.algebra != AlgebraKind::spin)
    throw ConfigError("the rotator reflection applies to spin systems only");

  std::string zeta = doc.value("zeta", "+i");
  if (zeta == "+i")
    cfg.zeta = TwistChoice::plus_i();
  else if (zeta == "-i")
    cfg.zeta = TwistChoice::minus_i();
  else
    throw ConfigError("zeta must be +i or -i");

  if (doc.contains("beta")) cfg.betas = parse_betas(doc.at("beta"));
  if (doc.contains("betas")) cfg.betas = parse_betas(doc.at("betas"));
  cfg.tolerance = doc.value("tolerance", 1e-9);
  if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");

  if (doc.contains("model")) {
    if (cfg.algebra != AlgebraKind::spin)
      throw ConfigError("model sections define spin systems; set algebra to spin");
    parse_model_section(doc.at("model"), cfg);
    return cfg;
  }

  cfg.lattice = parse_lattice(doc.at("lattice"));
  if (cfg.algebra == AlgebraKind::majorana) {
    cfg.majorana_couplings.twist = cfg.zeta;
    for (const auto& c : doc.at("couplings")) {
      BasisIndex row = parse_tuple(cfg.lattice, c.at("row"));
      BasisIndex col = parse_tuple(cfg.lattice, c.at("col"));
      cfg.majorana_couplings.set(row, col, parse_complex(c.at("value")));
    }
  } else {
    for (const auto& c : doc.at("couplings")) {
      SpinLabel row = parse_spin_label(cfg.lattice, c.at("row"));
      SpinLabel col = parse_spin_label(cfg.lattice, c.at("col"));
      cfg.spin_couplings.set(std::move(row), std::move(col), parse_complex(c.at("value")));
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

std::string render_tuple(const Lattice& lattice, BasisIndex idx) {
  if (idx == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < lattice.size(); ++i)
    if (idx & (BasisIndex{1} << i)) {
      if (!first) out += ",";
      first = false;
      out += lattice.name(i);
    }
  return out + "}";
}

std::string render_label(const Lattice& lattice, const SpinLabel& l) {
  if (l.empty()) return "{}";
  static const char* letters = "xyz";
  std::string out = "{";
  bool first = true;
  for (const auto& [site, letter] : l) {
    if (!first) out += ",";
    first = false;
    out += "s";
    out += letters[letter - 1];
    out += "[" + lattice.name(site) + "]";
  }
  return out + "}";
}

json report_json(const RPReport& r) {
  json j;
  j["provenance"] = r.provenance;
  j["rp"] = r.rp;
  j["marginal"] = r.marginal;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["tolerance"] = r.tolerance;
  if (r.provenance == "oracle") {
    j["beta"] = r.beta;
    j["partition_sum"] = r.partition_sum.real();
  }
  if (!r.witness.empty()) {
    j["witness"] = r.witness;
    j["witness_value"] = r.witness_value;
  }
  return j;
}

struct CriterionOutcome {
  RPReport report;
  std::vector<std::string> labels;
  std::vector<double> spectrum;
};

CriterionOutcome criterion_majorana(const RunConfig& cfg) {
  if (cfg.lattice.half_size() > 12)
    throw ConfigError("criterion mode is capped at 12 plus-side sites");
  HamiltonianProperties props = check_properties(cfg.majorana_couplings);
  if (!props.reflection_invariant)
    throw ConfigError("H is not reflection invariant (J is not Hermitian); "
                      "the spectral criterion does not apply");
  if (!props.gauge_invariant)
    throw ConfigError("H is not globally gauge invariant (J couples tuples of "
                      "unequal parity); the spectral criterion does not apply");

  PlusBasis basis(cfg.lattice);
  auto [labels, j0] = dense_across_block(basis, cfg.majorana_couplings);
  HermMatrix hm(j0);
  PsdCertificate cert = psd_check(hm, cfg.tolerance);
  EigenDecomposition eig = herm_eigen(hm);

  CriterionOutcome out;
  out.spectrum = eig.eigenvalues;
  for (BasisIndex idx : labels) out.labels.push_back(render_tuple(cfg.lattice, idx));
  out.report.provenance = "criterion";
  out.report.rp = cert.psd;
  out.report.marginal = cert.marginal;
  out.report.min_eigenvalue = cert.min_eigenvalue;
  out.report.tolerance = cert.tolerance_used;
  if (!cert.psd && !cert.witness.empty()) {
    // An eigenvector f of the negative eigenvalue yields the witness
    // A = sum q_I f_I C_I with omega_{beta H}(Theta(A) o A) < 0 at small beta.
    std::vector<cplx> amps(cert.witness.size());
    for (std::size_t i = 0; i < amps.size(); ++i)
      amps[i] = static_cast<double>(q_factor(labels[i])) * cert.witness[i];
    out.report.witness = render_witness(labels, amps, cfg.lattice);
    out.report.witness_value = cert.min_eigenvalue;
  }
  return out;
}

SpinCouplings transported_couplings(const RunConfig& cfg) {
  if (cfg.reflection == ReflectionKind::standard) return cfg.spin_couplings;
  // Corollary: rho_H is RP w.r.t. Theta' = alpha^-1 Theta alpha iff
  // rho_{alpha(H)} is RP w.r.t. Theta; run the criterion on alpha(H).
  GaugeAssignment g = GaugeAssignment::rotator(cfg.lattice);
  g.require_reflection_compatible(cfg.lattice);
  SpinElement h = build_spin_hamiltonian(cfg.lattice, cfg.spin_couplings);
  return extract_spin_couplings(cfg.lattice, gauge_transform(g, h));
}

CriterionOutcome criterion_spin(const RunConfig& cfg) {
  SpinCouplings j = transported_couplings(cfg);
  auto [labels, m] = spin_criterion_matrix(j);
  HermMatrix hm(m);
  PsdCertificate cert = psd_check(hm, cfg.tolerance);
  EigenDecomposition eig = herm_eigen(hm);

  CriterionOutcome out;
  out.spectrum = eig.eigenvalues;
  for (const SpinLabel& l : labels) out.labels.push_back(render_label(cfg.lattice, l));
  out.report.provenance = "criterion";
  out.report.rp = cert.psd;
  out.report.marginal = cert.marginal;
  out.report.min_eigenvalue = cert.min_eigenvalue;
  out.report.tolerance = cert.tolerance_used;
  if (!cert.psd && !cert.witness.empty()) {
    out.report.witness = render_spin_witness(labels, cert.witness, cfg.lattice);
    out.report.witness_value = cert.min_eigenvalue;
  }
  return out;
}

CriterionOutcome run_criterion(const RunConfig& cfg) {
  return cfg.algebra == AlgebraKind::majorana ? criterion_majorana(cfg) : criterion_spin(cfg);
}

std::vector<RPReport> run_oracle(const RunConfig& cfg) {
  std::vector<RPReport> out;
  if (cfg.algebra == AlgebraKind::majorana) {
    AlgebraElement h = build_hamiltonian(cfg.lattice, cfg.majorana_couplings);
    Representation rep(cfg.lattice);
    for (double beta : cfg.betas) out.push_back(rp_oracle(h, beta, rep, cfg.zeta, cfg.tolerance));
  } else {
    SpinElement h = build_spin_hamiltonian(cfg.lattice, cfg.spin_couplings);
    SpinReflection refl = cfg.reflection == ReflectionKind::standard
                              ? SpinReflection(cfg.lattice)
                              : SpinReflection(cfg.lattice, GaugeAssignment::rotator(cfg.lattice));
    SpinRepresentation rep(cfg.lattice);
    for (double beta : cfg.betas) out.push_back(spin_rp_oracle(h, refl, beta, rep, cfg.tolerance));
  }
  return out;
}

json properties_json(const RunConfig& cfg) {
  json j;
  if (cfg.algebra == AlgebraKind::majorana) {
    HamiltonianProperties p = check_properties(cfg.majorana_couplings);
    j["reflection_invariant"] = p.reflection_invariant;
    j["gauge_invariant"] = p.gauge_invariant;
    j["hermitian"] = p.hermitian;
  } else {
    SpinElement h = build_spin_hamiltonian(cfg.lattice, cfg.spin_couplings);
    SpinReflection refl = cfg.reflection == ReflectionKind::standard
                              ? SpinReflection(cfg.lattice)
                              : SpinReflection(cfg.lattice, GaugeAssignment::rotator(cfg.lattice));
    double scale = std::max(1.0, h.max_abs_amplitude());
    j["reflection_invariant"] = (refl(h) - h).max_abs_amplitude() <= 1e-9 * scale;
    j["gauge_invariant"] = true;  // the spin algebra is purely even
    j["hermitian"] = (spin_adjoint(h) - h).max_abs_amplitude() <= 1e-12 * scale;
  }
  return j;
}

void apply_overrides(RunConfig& cfg, const Overrides& o) {
  if (o.tolerance) cfg.tolerance = *o.tolerance;
  if (!o.betas.empty()) {
    for (double b : o.betas)
      if (!(b > 0)) throw ConfigError("beta values must be positive");
    cfg.betas = o.betas;
  }
  if (o.zeta) {
    if (*o.zeta == "+i")
      cfg.zeta = TwistChoice::plus_i();
    else if (*o.zeta == "-i")
      cfg.zeta = TwistChoice::minus_i();
    else
      throw ConfigError("zeta must be +i or -i");
    cfg.majorana_couplings.twist = cfg.zeta;
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

RunResult finish(int exit_code, const std::string& text, const json& doc) {
  RunResult r;
  r.exit_code = exit_code;
  r.text = text;
  r.json = doc.dump(2) + "\n";
  return r;
}

RunResult do_check(const RunConfig& cfg, bool force_oracle_only) {
  RunMode mode = force_oracle_only ? RunMode::oracle : cfg.mode;
  json doc;
  doc["command"] = force_oracle_only ? "oracle" : "check";
  doc["algebra"] = cfg.algebra == AlgebraKind::majorana ? "majorana" : "spin";
  doc["mode"] = mode == RunMode::criterion ? "criterion"
                : mode == RunMode::oracle  ? "oracle"
                                           : "both";
  doc["reflection"] = cfg.reflection == ReflectionKind::standard ? "standard" : "rotator";
  doc["betas"] = cfg.betas;
  doc["tolerance"] = cfg.tolerance;
  doc["properties"] = properties_json(cfg);

  std::ostringstream text;
  text << "algebra: " << doc["algebra"].get<std::string>()
       << "   reflection: " << doc["reflection"].get<std::string>() << "\n";
  text << "properties: RI=" << (doc["properties"]["reflection_invariant"].get<bool>() ? "yes" : "no")
       << " GI=" << (doc["properties"]["gauge_invariant"].get<bool>() ? "yes" : "no")
       << " hermitian=" << (doc["properties"]["hermitian"].get<bool>() ? "yes" : "no") << "\n";

  std::optional<bool> criterion_rp, oracle_rp;

  if (mode != RunMode::oracle) {
    CriterionOutcome c = run_criterion(cfg);
    criterion_rp = c.report.rp;
    doc["criterion"] = report_json(c.report);
    doc["criterion"]["labels"] = c.labels;
    doc["criterion"]["spectrum"] = c.spectrum;
    text << "criterion: " << (c.report.rp ? "RP" : "not RP")
         << (c.report.marginal ? " (marginal)" : "")
         << "  min eigenvalue " << fmt(c.report.min_eigenvalue) << "\n";
    if (!c.report.witness.empty())
      text << "  witness: " << c.report.witness << "\n";
  }

  if (mode != RunMode::criterion) {
    std::vector<RPReport> runs = run_oracle(cfg);
    bool all_rp = true;
    json jruns = json::array();
    for (const RPReport& r : runs) {
      all_rp = all_rp && r.rp;
      jruns.push_back(report_json(r));
      text << "oracle beta=" << fmt(r.beta) << ": " << (r.rp ? "RP" : "not RP")
           << (r.marginal ? " (marginal)" : "") << "  min Gram eigenvalue "
           << fmt(r.min_eigenvalue) << "  Z=" << fmt(r.partition_sum.real()) << "\n";
      if (!r.rp && !r.witness.empty())
        text << "  witness: " << r.witness << " (value " << fmt(r.witness_value) << ")\n";
    }
    oracle_rp = all_rp;
    doc["oracle"]["runs"] = jruns;
    doc["oracle"]["rp"] = all_rp;
  }

  bool rp = criterion_rp ? *criterion_rp : *oracle_rp;
  if (criterion_rp && oracle_rp) {
    bool agree = *criterion_rp == *oracle_rp;
    doc["agreement"] = agree;
    text << "agreement: " << (agree ? "yes" : "NO") << "\n";
    if (!agree) {
      doc["verdict"] = "disagreement";
      text << "verdict: criterion and oracle disagree\n";
      return finish(1, text.str(), doc);
    }
  }
  doc["verdict"] = rp ? "rp" : "not_rp";
  text << "verdict: " << (rp ? "RP" : "not RP") << "\n";
  return finish(rp ? 0 : 2, text.str(), doc);
}

RunResult do_spectrum(const RunConfig& cfg) {
  json doc;
  doc["command"] = "spectrum";
  std::ostringstream text;

  CriterionOutcome c = run_criterion(cfg);
  doc["labels"] = c.labels;
  doc["criterion_spectrum"] = c.spectrum;
  text << "criterion matrix eigenvalues (" << c.labels.size() << " labels):\n";
  for (double e : c.spectrum) text << "  " << fmt(e) << "\n";

  if (cfg.model_kind == ModelKind::long_range && cfg.cubic) {
    // The crossing weight matrix f(|x - theta(x')|) over the plus sites;
    // its positive semidefiniteness drives the long-range propositions.
    const CubicLattice& cubic = *cfg.cubic;
    std::vector<int> plus = cubic.lattice.plus_sites();
    int m = static_cast<int>(plus.size());
    ComplexMatrix f(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        std::vector<int> mirrored = cubic.coords[cubic.lattice.partner(plus[b])];
        double s = 0.0;
        for (std::size_t k = 0; k < mirrored.size(); ++k) {
          double d = (cubic.coords[plus[a]][k] - mirrored[k]) / 2.0;
          s += d * d;
        }
        f(a, b) = std::pow(std::sqrt(s), -cfg.model_spec->exponent);
      }
    EigenDecomposition eig = herm_eigen(HermMatrix(f));
    doc["f_matrix_spectrum"] = eig.eigenvalues;
    text << "long-range f-matrix eigenvalues:\n";
    for (double e : eig.eigenvalues) text << "  " << fmt(e) << "\n";
  }
  return finish(0, text.str(), doc);
}

std::string config_dir() {
  if (const char* env = std::getenv("RP_CERTIFY_CONFIG_DIR")) return env;
  return RP_CONFIG_DIR;
}

RunResult do_demo(const std::string& name, const Overrides& overrides) {
  std::vector<std::string> names = demo_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw ConfigError("unknown demo name: " + name + " (try one of: " +
                      [&] {
                        std::string s;
                        for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
                        return s;
                      }() + ")");
  RunConfig cfg = parse_config_file(config_dir() + "/" + name + ".json");
  apply_overrides(cfg, overrides);
  RunResult res = do_check(cfg, false);

  if (name == "rotator_ferro") {
    // Gauge-transport equivalence: omega_H(Theta'(X) X) equals
    // omega_{alpha(H)}(Theta(alpha(X)) alpha(X)) for all X.
    GaugeAssignment g = GaugeAssignment::rotator(cfg.lattice);
    SpinReflection theta_prime(cfg.lattice, g);
    SpinReflection theta(cfg.lattice);
    SpinElement h = build_spin_hamiltonian(cfg.lattice, cfg.spin_couplings);
    SpinElement ah = gauge_transform(g, h);
    SpinRepresentation rep(cfg.lattice);
    double beta = cfg.betas.front();

    std::ostringstream table;
    table << "gauge-transport table (beta=" << fmt(beta) << "):\n";
    table << "  X                 omega_H(Th'(X)X)   omega_aH(Th(aX)aX)  diff\n";
    int first_plus = cfg.lattice.plus_sites().front();
    std::vector<std::pair<std::string, SpinElement>> samples;
    static const char* letters = "xyz";
    for (int a = 1; a <= 3; ++a)
      samples.push_back({std::string("s") + letters[a - 1] + "[" +
                             cfg.lattice.name(first_plus) + "]",
                         SpinElement::pauli_string({{first_plus, a}})});
    if (cfg.lattice.plus_sites().size() > 1) {
      int second = cfg.lattice.plus_sites()[1];
      samples.push_back({"sx[" + cfg.lattice.name(first_plus) + "].sx[" +
                             cfg.lattice.name(second) + "]",
                         SpinElement::pauli_string({{first_plus, 1}, {second, 1}})});
    }
    json jtable = json::array();
    for (const auto& [label, x] : samples) {
      cplx lhs = spin_boltzmann(spin_mul(theta_prime(x), x), h, beta, rep);
      cplx rhs = spin_boltzmann(spin_mul(theta(gauge_transform(g, x)), gauge_transform(g, x)),
                                ah, beta, rep);
      table << "  " << label << "  " << fmt(lhs.real()) << "  " << fmt(rhs.real()) << "  "
            << fmt(std::abs(lhs - rhs)) << "\n";
      jtable.push_back({{"x", label},
                        {"omega_theta_prime", lhs.real()},
                        {"omega_transported", rhs.real()},
                        {"difference", std::abs(lhs - rhs)}});
    }
    res.text += table.str();
    json doc = json::parse(res.json);
    doc["gauge_transport_table"] = jtable;
    res.json = doc.dump(2) + "\n";
  }
  return res;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"majorana_2site",  "ising_afm_chain4",         "ising_fm_chain4",
          "heisenberg_afm_chain4", "rotator_ferro", "long_range_heisenberg_s1"};
}

RunResult run_command(const std::string& cmd, const std::string& argument,
                      const Overrides& overrides) {
  try {
    if (cmd == "demo") return do_demo(argument, overrides);
    RunConfig cfg = parse_config_file(argument);
    apply_overrides(cfg, overrides);
    if (cmd == "check") return do_check(cfg, false);
    if (cmd == "oracle") return do_check(cfg, true);
    if (cmd == "spectrum") return do_spectrum(cfg);
    throw ConfigError("unknown command: " + cmd);
  } catch (const std::exception& e) {
    json doc;
    doc["error"] = e.what();
    RunResult r;
    r.exit_code = 1;
    r.text = std::string("error: ") + e.what() + "\n";
    r.json = doc.dump(2) + "\n";
    return r;
  }
}

}  // namespace rp
