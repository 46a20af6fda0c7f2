#pragma once

#include <string_view>

#include <json.hpp>

#include "kac/cohomology.hpp"
#include "kac/torus_oracle.hpp"

namespace kac {

using Json = nlohmann::ordered_json;

/// Reads {"components": ["E7"], "generators": [["1/2", "0", ...], ...]}.
/// Coefficients may be strings "a/b" or integers. Throws SpecError.
GroupSpec parse_spec_json(std::string_view text);

Json to_json(const Rational& x);
Json to_json(const RatVec& v);
Json to_json(const GroupSpec& spec);
Json to_json(const CentralElement& z);
/// {"display": "...", "flat": "[...]", "labels": [...]}; "flat" is accepted back by parse_labeling.
Json to_json(const ExtendedDiagram& diagram, const KacLabeling& p);
Json to_json(const ExtendedDiagram& diagram, const LabelingOrbit& orbit);
Json to_json(const H1Result& r);
Json to_json(const RootsResult& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const std::vector<RealFormRow>& rows, const SimpleType& type);

}  // namespace kac
