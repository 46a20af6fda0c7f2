#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kac/kac_labelings.hpp"
#include "kac/lattice.hpp"
#include "kac/matrix.hpp"

namespace kac {

/// A point of T = V / X^vee in simple-coroot coordinates, reduced to the
/// canonical representative of its class.
struct TorusPoint {
  RatVec coords;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint& a, const TorusPoint& b) { return a.coords <=> b.coords; }
};

/// X^vee = { y : <lambda, y> in Z for every lambda in X }, in coroot coordinates.
///
/// Built from the lattice X alone (Z^l plus the generators of X/Q), without the
/// mark or fundamental-group tables used by the labeling side.
class CoweightLattice {
 public:
  explicit CoweightLattice(const GroupSpec& spec);

  /// Hermite basis: upper triangular rows with positive diagonal.
  const RatMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  bool contains(const RatVec& y) const;
  /// Canonical representative: coordinate i reduced into [0, basis(i, i)).
  TorusPoint reduce(RatVec y) const;
  /// [X^vee : Q^vee].
  Int index() const;
  const IntMatrix& cartan() const { return cartan_; }

 private:
  IntMatrix cartan_;
  RatMatrix pairing_;  // rows A x for a basis x of X; y in X^vee iff pairing_ y is integral
  RatMatrix basis_;
};

inline CoweightLattice build_coweight_lattice(const GroupSpec& spec) { return CoweightLattice(spec); }

/// Coset representative zeta in P^vee with <lambda_g, zeta> = z_g mod Z for each
/// generator, found by searching P^vee / Q^vee. Throws SpecError if none exists.
RatVec zeta_representative(const GroupSpec& spec, const CentralElement& z);

/// The class of (1/n) sum_{alpha in Pi} p_alpha omega_alpha^vee modulo X^vee.
TorusPoint phi(const KacLabeling& p, const GroupSpec& spec, const CoweightLattice& lattice);

/// T_n^z: all (zeta + mu) / n for mu in X^vee / n X^vee, exactly n^l points, sorted.
std::vector<TorusPoint> enumerate_roots_of_z(const CoweightLattice& lattice, const RatVec& zeta, Int n);

/// W-orbits on a point set by closure under the simple reflections. Each orbit
/// is sorted and orbits are ordered by their least point. Throws
/// ConsistencyError if a reflection leaves the set.
std::vector<std::vector<TorusPoint>> weyl_orbits(const std::vector<TorusPoint>& points, const CoweightLattice& lattice);

/// Size limits for the brute-force oracle.
struct OracleBudget {
  std::size_t max_rank = 7;
  Int max_n = 3;

  /// Defaults, overridden by KAC_ORACLE_BUDGET="rank,n" when set.
  static OracleBudget from_env();
  /// Throws BudgetExceeded with the estimated number of torus points.
  void check(std::size_t rank, Int n) const;
};

struct OrbitMatch {
  KacLabeling representative;
  std::size_t labeling_orbit_size = 0;
  TorusPoint point;  // phi(representative)
  std::size_t torus_orbit = 0;  // index into the torus orbit list
};

struct CrossCheckReport {
  GroupSpec spec;
  CentralElement z;
  Int n = 1;
  std::size_t labeling_classes = 0;
  std::size_t torus_classes = 0;
  std::vector<std::size_t> labeling_orbit_sizes;  // sorted
  std::vector<std::size_t> torus_orbit_sizes;     // sorted
  std::vector<OrbitMatch> matching;
  bool bijective = false;
  std::string failure;  // empty when bijective
};

/// Compares K_n^z / (X^vee/Q^vee) with T_n^z / W through phi: every labeling
/// orbit must land in one torus orbit, and the induced map must be a bijection.
CrossCheckReport cross_check(const GroupSpec& spec, const CentralElement& z, Int n,
                             const OracleBudget& budget = OracleBudget::from_env());

}  // namespace kac
