#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rp {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite index set with a fixed-point-free involution splitting it into two
// mirror-image halves. Sites are referred to by their position in a fixed
// global order; by convention the minus half comes first, in descending
// mirror order, followed by the plus half in ascending order. Any fixed
// total order is accepted by the algebra, the convention only makes the
// reflected words re-canonicalize predictably.
class Lattice {
public:
  Lattice(std::vector<std::string> names, std::vector<int> partner,
          std::vector<bool> on_plus_side)
      : names_(std::move(names)), partner_(std::move(partner)), plus_(std::move(on_plus_side)) {
    const int n = static_cast<int>(names_.size());
    if (n == 0 || n % 2 != 0) throw ConfigError("lattice must have an even, positive site count");
    if (static_cast<int>(partner_.size()) != n || static_cast<int>(plus_.size()) != n)
      throw ConfigError("lattice field lengths disagree");
    if (n > 64) throw ConfigError("lattices are capped at 64 sites");
    for (int i = 0; i < n; ++i) {
      if (partner_[i] < 0 || partner_[i] >= n) throw ConfigError("involution image out of range");
      if (partner_[i] == i) throw ConfigError("involution has a fixed point at site " + names_[i]);
      if (partner_[partner_[i]] != i) throw ConfigError("involution is not its own inverse");
      if (plus_[i] == plus_[partner_[i]])
        throw ConfigError("involution does not exchange the two sides at site " + names_[i]);
    }
    for (int i = 0; i < n; ++i)
      if (plus_[i]) {
        plus_sites_.push_back(i);
        plus_mask_ |= uint64_t{1} << i;
      }
  }

  // 2m sites: indices 0..m-1 are the minus side (partner of plus site
  // m+k is m-1-k), indices m..2m-1 the plus side.
  static Lattice mirrored(int half_size) {
    if (half_size <= 0) throw ConfigError("mirrored lattice needs a positive half size");
    const int n = 2 * half_size;
    std::vector<std::string> names(n);
    std::vector<int> partner(n);
    std::vector<bool> plus(n);
    for (int k = 0; k < half_size; ++k) {
      names[half_size + k] = std::to_string(k + 1);
      names[half_size - 1 - k] = "-" + std::to_string(k + 1);
      partner[half_size + k] = half_size - 1 - k;
      partner[half_size - 1 - k] = half_size + k;
      plus[half_size + k] = true;
      plus[half_size - 1 - k] = false;
    }
    return Lattice(std::move(names), std::move(partner), std::move(plus));
  }

  int size() const { return static_cast<int>(names_.size()); }
  int half_size() const { return size() / 2; }
  const std::string& name(int i) const { return names_[i]; }
  int partner(int i) const { return partner_[i]; }
  bool on_plus_side(int i) const { return plus_[i]; }
  const std::vector<int>& plus_sites() const { return plus_sites_; }
  uint64_t plus_mask() const { return plus_mask_; }
  uint64_t full_mask() const {
    return size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  }

private:
  std::vector<std::string> names_;
  std::vector<int> partner_;
  std::vector<bool> plus_;
  std::vector<int> plus_sites_;
  uint64_t plus_mask_ = 0;
};

}  // namespace rp
