#pragma once

#include <compare>
#include <ostream>

#include "kac/rational.hpp"

namespace kac {

/// Nonnegative integer labels over the vertices of an extended diagram, in
/// global vertex order, together with the target weighted sum n.
struct KacLabeling {
  IntVec labels;
  Int n = 0;

  Int operator[](std::size_t v) const { return labels[v]; }

  friend bool operator==(const KacLabeling&, const KacLabeling&) = default;
  friend auto operator<=>(const KacLabeling& a, const KacLabeling& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.labels <=> b.labels;
  }
};

inline std::ostream& operator<<(std::ostream& os, const KacLabeling& p) {
  os << '[';
  for (std::size_t i = 0; i < p.labels.size(); ++i) os << (i ? "," : "") << p.labels[i];
  return os << ']';
}

}  // namespace kac
