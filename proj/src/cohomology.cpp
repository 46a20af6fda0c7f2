#include "kac/cohomology.hpp"

#include <algorithm>
#include <map>

#include "kac/errors.hpp"

namespace kac {

TorusPoint phi(const KacLabeling& p, const GroupSpec& spec) { return phi(p, spec, CoweightLattice(spec)); }

CentralElement z_from_q(const KacLabeling& q, const GroupSpec& spec) {
  const GroupSpec s = validate_spec(spec);
  check_labeling(build_extended_diagram(s.components), q);
  return CentralElement{central_values(s, q)};
}

H1Result h1_inner_form(const GroupSpec& spec, const KacLabeling& q) {
  const SemisimpleGroup group(spec);
  if (q.n != 2) throw LabelingError("a twist must be a Kac 2-labeling");
  check_labeling(group.diagram(), q);

  H1Result r;
  r.group_spec = group.spec();
  r.twist = q;
  const auto k2q = filter_matching_q(enumerate_labelings(group.diagram(), 2), group.spec(), q);
  r.classes = orbit_decompose(k2q, group.dual_group());

  const ExtendedDiagram& d = group.diagram();
  bool found = false;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& members = r.classes[i].members;
    const bool neutral = std::binary_search(members.begin(), members.end(), q);
    if (neutral) {
      r.neutral_index = i;
      found = true;
    }
    const KacLabeling& p = neutral ? q : r.classes[i].representative;
    RatVec u;
    for (std::size_t a = 0; a < d.rank(); ++a) {
      const std::size_t v = d.vertex_of_root(a);
      u.emplace_back(p.labels[v] - q.labels[v], 2);
    }
    r.witnesses.push_back(std::move(u));
  }
  if (!found) throw ConsistencyError("the twist is missing from its own class list");
  return r;
}

H1Result h1_adjoint(const std::vector<SimpleType>& types) {
  GroupSpec adjoint{types, {}};
  const SemisimpleGroup group(adjoint);
  const ExtendedDiagram& d = group.diagram();

  KacLabeling compact{IntVec(d.vertex_count(), 0), 2};
  for (std::size_t k = 0; k < d.components.size(); ++k) compact.labels[d.vertex(k, 0)] = 2;

  H1Result r = h1_inner_form(adjoint, compact);
  const auto direct = orbit_decompose(enumerate_labelings(d, 2), group.fundamental_group());
  bool same = direct.size() == r.classes.size();
  for (std::size_t i = 0; same && i < direct.size(); ++i) same = direct[i].members == r.classes[i].members;
  if (!same) throw ConsistencyError("adjoint H^1 differs between the direct and the specialized computation");
  return r;
}

RootsResult nth_root_classes(const GroupSpec& spec, const CentralElement& z, Int n) {
  const SemisimpleGroup group(spec);
  check_central(group.spec(), z);
  RootsResult r;
  r.group_spec = group.spec();
  r.z = CentralElement{frac(z.values)};
  r.n = n;
  const auto kz = filter_for_central(enumerate_labelings(group.diagram(), n), group.spec(), r.z);
  r.classes = orbit_decompose(kz, group.dual_group());

  const CoweightLattice lattice(group.spec());
  const RatVec zeta = zeta_representative(group.spec(), r.z);
  for (const auto& o : r.classes) {
    TorusPoint t = phi(o.representative, group.spec(), lattice);
    RatVec check = t.coords;
    for (std::size_t i = 0; i < check.size(); ++i) check[i] = check[i] * n - zeta[i];
    if (!lattice.contains(check))
      throw ConsistencyError("phi of " + format_labeling_flat(o.representative) + " is not an n-th root of z");
    r.torus_points.push_back(std::move(t));
  }
  return r;
}

std::vector<RealFormRow> real_form_table(const SimpleType& type) {
  const H1Result h1 = h1_adjoint({type});
  const ExtendedDiagram d = build_extended_diagram({type});
  // classical names of the inner forms of E7, keyed by a member in display form
  const std::map<std::string, std::string> e7_names = {
      {"000/00/002", "compact"}, {"100/00/001", "EVII"}, {"010/00/000", "EVI"}, {"000/01/000", "EV"}};

  std::vector<RealFormRow> rows;
  for (std::size_t i = 0; i < h1.classes.size(); ++i) {
    RealFormRow row{"form-" + std::to_string(i + 1), "", h1.classes[i]};
    if (type == SimpleType{Family::E, 7})
      for (const auto& m : row.orbit.members)
        if (auto it = e7_names.find(format_labeling(d, m)); it != e7_names.end()) row.label = it->second;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kac
