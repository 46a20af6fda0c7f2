#include "kac/serialize.hpp"

#include "kac/errors.hpp"

namespace kac {

GroupSpec parse_spec_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("spec file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array())
    throw SpecError("spec file needs a \"components\" array");
  for (const auto& [key, value] : doc.items())
    if (key != "components" && key != "generators") throw SpecError("unknown key \"" + key + "\" in spec file");

  GroupSpec spec;
  for (const auto& c : doc["components"]) {
    if (!c.is_string()) throw SpecError("components must be strings like \"E7\"");
    spec.components.push_back(SimpleType::parse(c.get<std::string>()));
  }
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) throw SpecError("\"generators\" must be an array of arrays");
    for (const auto& g : doc["generators"]) {
      if (!g.is_array()) throw SpecError("each generator must be an array of coefficients");
      RatVec c;
      for (const auto& x : g) {
        try {
          if (x.is_string()) {
            c.push_back(parse_rational(x.get<std::string>()));
          } else if (x.is_number_integer()) {
            c.emplace_back(x.get<Int>());
          } else {
            throw std::invalid_argument("not a rational");
          }
        } catch (const std::invalid_argument&) {
          throw SpecError("bad coefficient " + x.dump() + " in spec file");
        }
      }
      spec.generators.push_back(std::move(c));
    }
  }
  return validate_spec(spec);
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const GroupSpec& spec) {
  const SemisimpleGroup g(spec);
  Json components = Json::array();
  for (const auto& t : g.spec().components) components.push_back(t.name());
  Json generators = Json::array();
  for (const auto& c : g.spec().generators) generators.push_back(to_json(c));
  return Json{{"components", components},
              {"generators", generators},
              {"x_mod_q_order", g.xq_elements().size()},
              {"dual_group", g.dual_group().structure}};
}

Json to_json(const CentralElement& z) { return to_json(z.values); }

Json to_json(const ExtendedDiagram& diagram, const KacLabeling& p) {
  return Json{{"display", format_labeling(diagram, p)}, {"flat", format_labeling_flat(p)}, {"labels", p.labels}};
}

Json to_json(const ExtendedDiagram& diagram, const LabelingOrbit& orbit) {
  Json members = Json::array();
  for (const auto& m : orbit.members) members.push_back(to_json(diagram, m));
  return Json{{"representative", to_json(diagram, orbit.representative)},
              {"members", members},
              {"stabilizer_order", orbit.stabilizer_order}};
}

Json to_json(const H1Result& r) {
  const ExtendedDiagram d = build_extended_diagram(r.group_spec.components);
  Json classes = Json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    Json c = to_json(d, r.classes[i]);
    c["witness"] = to_json(r.witnesses[i]);
    classes.push_back(std::move(c));
  }
  return Json{{"group", to_json(r.group_spec)},
              {"twist", to_json(d, r.twist)},
              {"class_count", r.classes.size()},
              {"neutral_index", r.neutral_index},
              {"classes", classes}};
}

Json to_json(const RootsResult& r) {
  const ExtendedDiagram d = build_extended_diagram(r.group_spec.components);
  Json classes = Json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    Json c = to_json(d, r.classes[i]);
    c["torus_point"] = to_json(r.torus_points[i].coords);
    classes.push_back(std::move(c));
  }
  return Json{{"group", to_json(r.group_spec)},
              {"z", to_json(r.z)},
              {"n", r.n},
              {"class_count", r.classes.size()},
              {"classes", classes}};
}

Json to_json(const CrossCheckReport& r) {
  const ExtendedDiagram d = build_extended_diagram(r.spec.components);
  Json matching = Json::array();
  for (const auto& m : r.matching)
    matching.push_back(Json{{"representative", to_json(d, m.representative)},
                            {"labeling_orbit_size", m.labeling_orbit_size},
                            {"torus_point", to_json(m.point.coords)},
                            {"torus_orbit", m.torus_orbit}});
  return Json{{"group", to_json(r.spec)},
              {"z", to_json(r.z)},
              {"n", r.n},
              {"labeling_classes", r.labeling_classes},
              {"torus_classes", r.torus_classes},
              {"labeling_orbit_sizes", r.labeling_orbit_sizes},
              {"torus_orbit_sizes", r.torus_orbit_sizes},
              {"bijective", r.bijective},
              {"failure", r.failure},
              {"matching", matching}};
}

Json to_json(const std::vector<RealFormRow>& rows, const SimpleType& type) {
  const ExtendedDiagram d = build_extended_diagram({type});
  Json forms = Json::array();
  for (const auto& row : rows) {
    Json f = to_json(d, row.orbit);
    f["name"] = row.name;
    f["label"] = row.label;
    forms.push_back(std::move(f));
  }
  return Json{{"type", type.name()}, {"form_count", rows.size()}, {"forms", forms}};
}

}  // namespace kac
