#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dergrade {

/// Canonical label of a coset gN.
///
/// Heisenberg: (i, j) image in H/H' = Z + Z. Z^n: the vector itself (N is
/// trivial). Permutation groups: one-line notation (1-based) of the
/// lexicographically minimal member of the coset.
struct CosetKey {
  std::vector<std::int64_t> value;

  auto operator<=>(const CosetKey&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CosetKey& k) {
    os << "(";
    for (std::size_t i = 0; i < k.value.size(); ++i) os << (i ? "," : "") << k.value[i];
    return os << ")";
  }
};

} // namespace dergrade
