#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kac/extended_dynkin.hpp"
#include "kac/labeling.hpp"
#include "kac/lattice.hpp"

namespace kac {

struct LabelingOrbit {
  KacLabeling representative;  // lexicographically least member
  std::vector<KacLabeling> members;  // sorted
  std::size_t stabilizer_order = 1;
};

/// K_n: every labeling with sum_beta m_beta p_beta = n on each component, in
/// ascending lexicographic order of the global label vector.
std::vector<KacLabeling> enumerate_labelings(const ExtendedDiagram& diagram, Int n);

/// Throws LabelingError unless `p` is a Kac n-labeling of the diagram.
void check_labeling(const ExtendedDiagram& diagram, const KacLabeling& p);

/// sum_{alpha in Pi} c_alpha p_alpha mod Z for each generator of X/Q.
RatVec central_values(const GroupSpec& spec, const KacLabeling& p);

/// K_n^z: labelings whose central values equal z.
std::vector<KacLabeling> filter_for_central(const std::vector<KacLabeling>& labelings, const GroupSpec& spec,
                                            const CentralElement& z);

/// K_n^(q): labelings with the same central values as q. Throws LabelingError
/// if q is not a labeling of the spec's diagram.
std::vector<KacLabeling> filter_matching_q(const std::vector<KacLabeling>& labelings, const GroupSpec& spec,
                                           const KacLabeling& q);

/// Orbits of `group` on a set of labelings, sorted by representative. Throws
/// ConsistencyError if the set is not closed under the action.
std::vector<LabelingOrbit> orbit_decompose(const std::vector<KacLabeling>& labelings, const FundamentalGroup& group);

/// Display form: per component the labels in rows separated by '/', e.g.
/// "000/00/002" for E7 with p_0 = 2; components are joined by " | ".
/// Labels above 9 are written in parentheses.
std::string format_labeling(const ExtendedDiagram& diagram, const KacLabeling& p);

/// Flat machine form "[p_1,...,p_0,...]" in global vertex order.
std::string format_labeling_flat(const KacLabeling& p);

/// Accepts both forms above. In the display form '/' and spaces are cosmetic.
/// The result is checked against the diagram with the given n, or with the
/// weighted sum of the first component when n == 0.
KacLabeling parse_labeling(const ExtendedDiagram& diagram, std::string_view text, Int n = 0);

/// The order in which display form lists the vertices of one component
/// (diagram numbering, 0 = extra vertex), grouped into rows.
std::vector<std::vector<int>> display_rows(const SimpleType& type);

}  // namespace kac
