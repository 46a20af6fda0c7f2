#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kac/extended_dynkin.hpp"
#include "kac/rational.hpp"

namespace kac {

/// A compact semisimple group up to isomorphism: simple components plus
/// generators of X/Q, each a root-coefficient vector c with lambda = sum c_a alpha_a
/// over the global simple roots.
struct GroupSpec {
  std::vector<SimpleType> components;
  std::vector<RatVec> generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// An element of Z_G = Hom(X/Q, Q/Z): the values d lambda(zeta) mod Z on the
/// stored generators, each kept in [0, 1).
struct CentralElement {
  RatVec values;

  bool is_trivial() const { return is_zero(values); }
  friend bool operator==(const CentralElement&, const CentralElement&) = default;
  friend auto operator<=>(const CentralElement& a, const CentralElement& b) { return a.values <=> b.values; }
};

/// Checks lambda in P for every generator and returns the spec with generators
/// reduced into [0,1)^rank and redundant ones (already in the span of earlier
/// ones) dropped. Throws SpecError.
GroupSpec validate_spec(const GroupSpec& spec);

/// All elements of the subgroup of P/Q generated by `generators`, as reduced
/// coefficient vectors, sorted. Zero is always first.
std::vector<RatVec> subgroup_closure(const std::vector<RatVec>& generators, std::size_t rank);

/// Order of c in P/Q.
std::size_t order_mod_q(const RatVec& c);

/// P/Q for the given components, from all fundamental weights.
std::vector<RatVec> weight_classes(const std::vector<SimpleType>& types);

/// <lambda, omega_j^vee> mod Z = c_j mod Z, for a mark-1 vertex. The extra
/// vertex of a component stands for the trivial coset and gives 0.
Rational pairing(const ExtendedDiagram& diagram, const RatVec& lambda, std::size_t vertex);

/// <lambda, g> mod Z for a fundamental group element, summed over components.
Rational pairing(const ExtendedDiagram& diagram, const RatVec& lambda, const FundamentalGroupElement& g);

/// A validated group with its derived combinatorial data.
class SemisimpleGroup {
 public:
  explicit SemisimpleGroup(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  const ExtendedDiagram& diagram() const { return diagram_; }
  std::size_t rank() const { return diagram_.rank(); }
  /// P^vee/Q^vee.
  const FundamentalGroup& fundamental_group() const { return full_group_; }
  /// X^vee/Q^vee, the annihilator of X/Q.
  const FundamentalGroup& dual_group() const { return dual_group_; }
  /// X/Q as reduced coefficient vectors.
  const std::vector<RatVec>& xq_elements() const { return xq_; }
  std::size_t pq_order() const { return pq_order_; }
  std::string name() const;

 private:
  GroupSpec spec_;
  ExtendedDiagram diagram_;
  FundamentalGroup full_group_;
  FundamentalGroup dual_group_;
  std::vector<RatVec> xq_;
  std::size_t pq_order_ = 1;
};

/// X^vee/Q^vee = { g : <lambda, g> = 0 mod Z for every generator }.
FundamentalGroup dual_subgroup(const ExtendedDiagram& diagram, const std::vector<RatVec>& generators);

/// All homomorphisms X/Q -> Q/Z; the trivial one first, then lexicographic.
std::vector<CentralElement> enumerate_center(const GroupSpec& spec);

/// Throws SpecError unless `z` extends to a homomorphism on X/Q.
void check_central(const GroupSpec& spec, const CentralElement& z);

/// Presets "sc:E7", "ad:A1xA1", "halfspin:D12", "so:D5". Components are
/// joined with 'x'. Throws SpecError on an unknown preset.
GroupSpec preset(std::string_view text);

/// One spec per subgroup of P/Q (i.e. per intermediate lattice), adjoint first.
std::vector<GroupSpec> intermediate_lattices(const std::vector<SimpleType>& types);

}  // namespace kac
