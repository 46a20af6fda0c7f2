#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kac/labeling.hpp"
#include "kac/root_system.hpp"

namespace kac {

/// Permutation of the vertices 0..l of one extended diagram, diagram numbering:
/// perm[i] is the image of vertex i.
using VertexPermutation = std::vector<int>;

struct DiagramComponent {
  CartanData data;
  std::size_t first_vertex = 0;  // global index of local vertex 1
  std::size_t first_root = 0;    // global index of alpha_1 in Pi
};

struct DiagramEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Int uv = 0;  // <beta_v, beta_u^vee>
  Int vu = 0;  // <beta_u, beta_v^vee>

  Int multiplicity() const { return uv * vu; }
};

/// Disjoint union of extended Dynkin diagrams.
///
/// Global vertex order is component-major; inside a component the simple
/// roots 1..l come first and the extra vertex 0 last.
class ExtendedDiagram {
 public:
  std::vector<DiagramComponent> components;
  IntVec marks;
  std::vector<DiagramEdge> edges;

  std::size_t vertex_count() const { return marks.size(); }
  std::size_t rank() const;

  /// Global index of vertex `local` (0 = extra) in component k.
  std::size_t vertex(std::size_t k, int local) const;
  std::size_t component_of(std::size_t v) const;
  /// Diagram number (0 = extra vertex) of a global vertex inside its component.
  int local_index(std::size_t v) const;
  bool is_extra(std::size_t v) const { return local_index(v) == 0; }
  /// Global simple-root index of a non-extra vertex.
  std::optional<std::size_t> root_index(std::size_t v) const;
  std::size_t vertex_of_root(std::size_t root) const;

  std::vector<SimpleType> types() const;
  /// Block-diagonal Cartan matrix over the global simple roots.
  IntMatrix cartan() const;
};

/// Throws SpecError on an empty list.
ExtendedDiagram build_extended_diagram(const std::vector<SimpleType>& types);

/// An element of P^vee/Q^vee stored componentwise.
struct FundamentalGroupElement {
  /// Per component: 0 for the trivial coset, else the mark-1 vertex j of [omega_j^vee].
  std::vector<int> tags;
  /// Induced permutation of global vertices.
  std::vector<std::size_t> sigma;

  bool is_identity() const;
  friend bool operator==(const FundamentalGroupElement&, const FundamentalGroupElement&) = default;
};

class FundamentalGroup {
 public:
  std::vector<FundamentalGroupElement> elements;  // identity first
  std::vector<std::vector<std::size_t>> table;    // table[a][b] = index of a*b
  std::string structure;                          // "Z/2 x Z/2", "trivial", ...

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const FundamentalGroupElement& g) const;
};

/// Hardcoded sigma_j for a mark-1 vertex j != 0; nullopt when m_j != 1.
std::optional<VertexPermutation> sigma_table(const SimpleType& type, int j);

/// sigma_j computed from the affine map y -> w_j w_0 y + omega_j^vee acting on
/// the alcove vertices omega_i^vee / m_i and 0. Throws SpecError if m_j != 1 and
/// ConsistencyError if an image is not a vertex.
VertexPermutation sigma_geometric(const CartanData& data, int j);

/// The group of one simple type from the hardcoded tables, acting on the
/// single-component diagram of that type.
FundamentalGroup fundamental_group_table(const SimpleType& type);

/// Direct product of the per-component groups.
FundamentalGroup fundamental_group(const ExtendedDiagram& diagram);

/// Elements satisfying `keep`, with a recomputed table. Throws ConsistencyError
/// if the kept set is not closed under multiplication.
template <class Pred>
FundamentalGroup restrict_group(const FundamentalGroup& group, Pred keep);

/// p'_i = p_{sigma^{-1}(i)}.
KacLabeling act_on_labeling(const FundamentalGroupElement& g, const KacLabeling& p);

/// Abelian invariants from element orders, e.g. "Z/2 x Z/2".
std::string describe_abelian(const std::vector<std::size_t>& element_orders);

/// Multi-line ASCII listing of vertices, marks, optional labels and bonds.
std::string render_diagram(const ExtendedDiagram& diagram, const KacLabeling* labels = nullptr);

// ---------------------------------------------------------------------------

FundamentalGroup finish_group(std::vector<FundamentalGroupElement> elements);

template <class Pred>
FundamentalGroup restrict_group(const FundamentalGroup& group, Pred keep) {
  std::vector<FundamentalGroupElement> kept;
  for (const auto& g : group.elements)
    if (keep(g)) kept.push_back(g);
  return finish_group(std::move(kept));
}

}  // namespace kac
