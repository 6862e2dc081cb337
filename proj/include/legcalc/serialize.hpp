#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encoding/decoding for the public value types.
 *
 * Shapes match the schemas under /schemas.  Encoding is deterministic:
 * object keys are emitted in a fixed order and integer-valued fields stay
 * integers, so identical values serialize to identical bytes.
 */

#include <string>

#include "json.hpp"

#include "legcalc/cables.hpp"
#include "legcalc/farey.hpp"
#include "legcalc/fronts.hpp"
#include "legcalc/mountain.hpp"
#include "legcalc/torus_links.hpp"

namespace legcalc::serialize {

using json = nlohmann::ordered_json;

json to_json(const farey::Slope& s);
farey::Slope slope_from_json(const json& j);

json to_json(const mountain::Peak& c);
mountain::Peak class_from_json(const json& j);

json to_json(const mountain::MountainRange& mr);
mountain::MountainRange range_from_json(const json& j);

json to_json(const links::NondestabRep& rep);
json to_json(const cables::CableRep& rep);

json to_json(const cables::KnotTypeData& k);
cables::KnotTypeData knot_type_from_json(const json& j);

json to_json(const fronts::FrontWord& f);
fronts::FrontWord front_from_json(const json& j);

/// Parses a JSON array of {"tb":..,"r":..} objects into a sorted multiset.
std::vector<mountain::Peak> link_from_json(const json& j);

}  // namespace legcalc::serialize
