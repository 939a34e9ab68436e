#include "rp/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rp {

namespace {

std::string coord_name(const std::vector<int>& doubled) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (i) out += ",";
    std::snprintf(buf, sizeof(buf), "%.1f", doubled[i] / 2.0);
    out += buf;
  }
  return out;
}

std::vector<int> mirrored_coords(std::vector<int> c) {
  c[0] = -c[0];
  return c;
}

}  // namespace

int CubicLattice::site_at(const std::vector<int>& doubled_coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == doubled_coords) return static_cast<int>(i);
  throw ConfigError("no lattice site at the requested coordinates");
}

CubicLattice build_cubic(int d, int L) {
  if (d < 1 || d > 3) throw ConfigError("cubic lattice dimension must be 1, 2 or 3");
  if (L < 1) throw ConfigError("cubic lattice extent must be positive");

  std::vector<std::vector<int>> plus;
  std::vector<int> axis_values;  // odd doubled coordinates -(2L-1)..(2L-1)
  for (int v = -(2 * L - 1); v <= 2 * L - 1; v += 2) axis_values.push_back(v);

  std::vector<int> current(d, 0);
  // Enumerate the plus half (coordinate 0 positive) in ascending lex order.
  auto recurse = [&](auto&& self, int axis) -> void {
    const std::vector<int>& values = axis_values;
    if (axis == d) {
      plus.push_back(current);
      return;
    }
    for (int v : values) {
      if (axis == 0 && v < 0) continue;
      current[axis] = v;
      self(self, axis + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(plus.begin(), plus.end());

  int m = static_cast<int>(plus.size());
  CubicLattice cubic;
  cubic.dimension = d;
  cubic.extent = L;
  cubic.coords.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    cubic.coords[k] = mirrored_coords(plus[m - 1 - k]);
    cubic.coords[m + k] = plus[k];
  }

  std::vector<std::string> names;
  std::vector<int> partner;
  std::vector<bool> side;
  for (int i = 0; i < 2 * m; ++i) {
    names.push_back(coord_name(cubic.coords[i]));
    side.push_back(i >= m);
    partner.push_back(2 * m - 1 - i);
  }
  cubic.lattice = Lattice(std::move(names), std::move(partner), std::move(side));
  return cubic;
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::ising: return "ising";
    case ModelKind::rotator: return "rotator";
    case ModelKind::heisenberg: return "heisenberg";
    case ModelKind::long_range: return "long_range";
  }
  return "?";
}

namespace {

std::vector<int> active_axes(ModelKind kind) {
  switch (kind) {
    case ModelKind::ising: return {3};
    case ModelKind::rotator: return {1, 2};
    default: return {1, 2, 3};
  }
}

Bond canonical(int a, int b) { return a < b ? Bond{a, b} : Bond{b, a}; }

bool nearest_neighbours(const std::vector<int>& a, const std::vector<int>& b) {
  int diff_axes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = std::abs(a[i] - b[i]);
    if (d == 0) continue;
    if (d != 2) return false;
    ++diff_axes;
  }
  return diff_axes == 1;
}

double pair_distance(const std::vector<int>& a, const std::vector<int>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = (a[i] - b[i]) / 2.0;
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

SpinCouplings build_model(const CubicLattice& cubic, const ModelSpec& spec) {
  const Lattice& lattice = cubic.lattice;
  std::vector<int> axes = active_axes(spec.kind);
  for (int a = 1; a <= 3; ++a) {
    bool active = std::find(axes.begin(), axes.end(), a) != axes.end();
    if (!active && spec.coupling[a - 1] != 0.0)
      throw ConfigError("model kind " + model_kind_name(spec.kind) +
                        " does not admit a J" + std::to_string(a) + " coupling");
  }
  for (const auto& [key, value] : spec.bond_couplings) {
    if (spec.kind == ModelKind::long_range)
      throw ConfigError("long-range models do not take per-bond couplings");
    if (std::find(axes.begin(), axes.end(), key.second) == axes.end())
      throw ConfigError("per-bond coupling uses an axis the model kind does not admit");
  }

  // Assemble the full coupling table J^a_{jj'}.
  std::map<std::pair<Bond, int>, double> table;
  int n = lattice.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool nn = nearest_neighbours(cubic.coords[i], cubic.coords[j]);
      if (spec.kind == ModelKind::long_range) {
        double f = std::pow(pair_distance(cubic.coords[i], cubic.coords[j]), -spec.exponent);
        for (int a : axes)
          if (spec.coupling[a - 1] != 0.0) table[{Bond{i, j}, a}] = spec.coupling[a - 1] * f;
      } else if (nn) {
        for (int a : axes)
          if (spec.coupling[a - 1] != 0.0) table[{Bond{i, j}, a}] = spec.coupling[a - 1];
      }
    }
  for (const auto& [key, value] : spec.bond_couplings) {
    const Bond& b = key.first;
    if (b.site_a < 0 || b.site_b < 0 || b.site_a >= n || b.site_b >= n || b.site_a == b.site_b)
      throw ConfigError("per-bond coupling names an invalid site pair");
    if (!nearest_neighbours(cubic.coords[b.site_a], cubic.coords[b.site_b]))
      throw ConfigError("per-bond coupling on sites " + lattice.name(b.site_a) + ", " +
                        lattice.name(b.site_b) + " which are not nearest neighbours");
    if (value == 0.0)
      table.erase({canonical(b.site_a, b.site_b), key.second});
    else
      table[{canonical(b.site_a, b.site_b), key.second}] = value;
  }

  // Theta-symmetry: J^a_{jj'} = J^a_{theta(j) theta(j')}.
  for (const auto& [key, value] : table) {
    Bond mirror = canonical(lattice.partner(key.first.site_a), lattice.partner(key.first.site_b));
    auto it = table.find({mirror, key.second});
    double mv = it == table.end() ? 0.0 : it->second;
    if (std::abs(mv - value) > 1e-12)
      throw ConfigError("couplings are not reflection symmetric: J" +
                        std::to_string(key.second) + " differs on bonds (" +
                        lattice.name(key.first.site_a) + "," + lattice.name(key.first.site_b) +
                        ") and (" + lattice.name(mirror.site_a) + "," +
                        lattice.name(mirror.site_b) + ")");
  }

  // Field parity per axis.
  for (const auto& [key, value] : spec.fields) {
    auto [site, axis] = key;
    if (site < 0 || site >= n) throw ConfigError("field names an invalid site");
    if (axis < 1 || axis > 3) throw ConfigError("field axis must be 1, 2 or 3");
    FieldParity parity = spec.field_parity[axis - 1];
    if (parity == FieldParity::zero && value != 0.0)
      throw ConfigError("field on axis " + std::to_string(axis) +
                        " present but declared absent");
    auto it = spec.fields.find({lattice.partner(site), axis});
    double pv = it == spec.fields.end() ? 0.0 : it->second;
    double expect = parity == FieldParity::antisymmetric ? -value : value;
    if (std::abs(pv - expect) > 1e-12)
      throw ConfigError("field parity violated on sites " + lattice.name(site) + ", " +
                        lattice.name(lattice.partner(site)) + " (axis " +
                        std::to_string(axis) + ")");
  }

  SpinElement h;
  for (const auto& [key, value] : table) {
    SpinLabel l{{key.first.site_a, key.second}, {key.first.site_b, key.second}};
    h.add_term(std::move(l), -value);
  }
  for (const auto& [key, value] : spec.fields)
    if (value != 0.0) h.add_term({{key.first, key.second}}, -value);

  return extract_spin_couplings(lattice, h);
}

}  // namespace rp
