#pragma once

#include <string>
#include <vector>

#include "kac/kac_labelings.hpp"
#include "kac/lattice.hpp"
#include "kac/torus_oracle.hpp"

namespace kac {

/// H^1(R, qG) as orbits of X^vee/Q^vee on K_2^(q).
struct H1Result {
  GroupSpec group_spec;
  KacLabeling twist;
  std::vector<LabelingOrbit> classes;
  /// Per class, u_alpha = (p_alpha - q_alpha) / 2 over the simple roots. The
  /// class of q uses q itself, so its witness is zero; every other class uses
  /// its canonical representative.
  std::vector<RatVec> witnesses;
  std::size_t neutral_index = 0;
};

/// Conjugacy classes of n-th roots of a central element.
struct RootsResult {
  GroupSpec group_spec;
  CentralElement z;
  Int n = 1;
  std::vector<LabelingOrbit> classes;
  std::vector<TorusPoint> torus_points;  // phi of each representative
};

/// phi(p) with the lattice of the spec built on the spot.
TorusPoint phi(const KacLabeling& p, const GroupSpec& spec);

/// z = phi(q)^n, recorded as its values on the generators of X/Q.
CentralElement z_from_q(const KacLabeling& q, const GroupSpec& spec);

/// H^1 of the adjoint group, twisted by the compact form (label 2 on every extra
/// vertex). Computed directly and as the adjoint case of h1_inner_form; throws
/// ConsistencyError if the two disagree.
H1Result h1_adjoint(const std::vector<SimpleType>& types);

/// Throws LabelingError if q is not a Kac 2-labeling of the spec's diagram.
H1Result h1_inner_form(const GroupSpec& spec, const KacLabeling& q);

/// Throws SpecError if z is not a character of X/Q. Every class is checked to
/// satisfy n t - zeta in X^vee for its torus point t.
RootsResult nth_root_classes(const GroupSpec& spec, const CentralElement& z, Int n);

struct RealFormRow {
  std::string name;  // "form-1", "form-2", ... in the order of the classes
  std::string label;  // classical name where known, else empty
  LabelingOrbit orbit;
};

/// The adjoint classes of one simple type, as the menu of twists q.
std::vector<RealFormRow> real_form_table(const SimpleType& type);

}  // namespace kac
