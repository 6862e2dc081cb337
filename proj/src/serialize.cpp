#include "legcalc/serialize.hpp"

#include <stdexcept>

namespace legcalc::serialize {

namespace {

std::int64_t require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw std::invalid_argument(path + ": expected an integer");
    return j.get<std::int64_t>();
}

bool require_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw std::invalid_argument(path + ": expected a boolean");
    return j.get<bool>();
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(path + ": expected an object with field '" +
                                    std::string(key) + "'");
    return j.at(key);
}

json components_to_json(const links::LinkMultiset& comps) {
    json arr = json::array();
    for (const mountain::Peak& c : comps) arr.push_back(to_json(c));
    return arr;
}

}  // namespace

json to_json(const farey::Slope& s) { return json(farey::to_string(s)); }

farey::Slope slope_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument(": expected a slope string \"q/p\"");
    return farey::parse_slope(j.get<std::string>());
}

json to_json(const mountain::Peak& c) { return json{{"tb", c.tb}, {"r", c.r}}; }

mountain::Peak class_from_json(const json& j) {
    return mountain::Peak{require_int(require_field(j, "tb", ""), "/tb"),
                          require_int(require_field(j, "r", ""), "/r")};
}

json to_json(const mountain::MountainRange& mr) {
    json arr = json::array();
    for (const mountain::Peak& p : mr.peaks()) arr.push_back(to_json(p));
    return json{{"peaks", arr}};
}

mountain::MountainRange range_from_json(const json& j) {
    const json& peaks = require_field(j, "peaks", "");
    if (!peaks.is_array()) throw std::invalid_argument("/peaks: expected an array");
    std::vector<mountain::Peak> ps;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const json& p = peaks[i];
        const std::string path = "/peaks/" + std::to_string(i);
        ps.push_back(mountain::Peak{require_int(require_field(p, "tb", path), path + "/tb"),
                                    require_int(require_field(p, "r", path), path + "/r")});
    }
    return mountain::MountainRange(std::move(ps));
}

json to_json(const links::NondestabRep& rep) {
    return json{{"kind", links::to_string(rep.kind)},
                {"t", rep.t},
                {"r0", rep.r0},
                {"components", components_to_json(rep.components)}};
}

json to_json(const cables::CableRep& rep) {
    // NCopy/Twisted reps share the torus-link rep shape so that integral
    // unknot cables serialize identically to the torus-link classification.
    switch (rep.kind) {
        case cables::CableRep::Kind::NCopy:
            return json{{"kind", "ncopy"},
                        {"t", rep.t},
                        {"r0", rep.base.r},
                        {"components", components_to_json(rep.components)}};
        case cables::CableRep::Kind::Twisted:
            return json{{"kind", "twisted"},
                        {"t", rep.t},
                        {"r0", rep.base.r},
                        {"components", components_to_json(rep.components)}};
        case cables::CableRep::Kind::StdCable:
            return json{{"kind", "std"},
                        {"base", to_json(rep.base)},
                        {"pm", rep.pm},
                        {"components", components_to_json(rep.components)}};
    }
    throw std::logic_error("unreachable");
}

json to_json(const cables::KnotTypeData& k) {
    json cable_of = nullptr;
    if (k.cable_of) cable_of = json::array({k.cable_of->first, k.cable_of->second});
    return json{{"name", k.name},
                {"peaks", to_json(k.range)["peaks"]},
                {"uniformly_thick", k.uniformly_thick},
                {"legendrian_simple", k.legendrian_simple},
                {"cable_of", cable_of}};
}

cables::KnotTypeData knot_type_from_json(const json& j) {
    const json& name = require_field(j, "name", "");
    if (!name.is_string()) throw std::invalid_argument("/name: expected a string");
    mountain::MountainRange range = range_from_json(j);
    std::optional<std::pair<std::int64_t, std::int64_t>> cable_of;
    if (j.contains("cable_of") && !j.at("cable_of").is_null()) {
        const json& c = j.at("cable_of");
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("/cable_of: expected [r, s] or null");
        cable_of = {require_int(c[0], "/cable_of/0"), require_int(c[1], "/cable_of/1")};
    }
    return cables::make_knot_type(
        name.get<std::string>(), std::move(range),
        require_bool(require_field(j, "uniformly_thick", ""), "/uniformly_thick"),
        require_bool(require_field(j, "legendrian_simple", ""), "/legendrian_simple"),
        cable_of);
}

json to_json(const fronts::FrontWord& f) {
    json events = json::array();
    for (const fronts::Event& e : f.events) {
        const char* tag = e.type == fronts::EventType::LeftCusp    ? "L"
                          : e.type == fronts::EventType::RightCusp ? "R"
                                                                   : "X";
        events.push_back(json::array({tag, e.pos}));
    }
    return json{{"events", events}};
}

fronts::FrontWord front_from_json(const json& j) {
    const json& events = require_field(j, "events", "");
    if (!events.is_array()) throw std::invalid_argument("/events: expected an array");
    fronts::FrontWord f;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const std::string path = "/events/" + std::to_string(i);
        const json& e = events[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string())
            throw std::invalid_argument(path + ": expected [\"L\"|\"R\"|\"X\", pos]");
        const std::string tag = e[0].get<std::string>();
        fronts::EventType type;
        if (tag == "L")
            type = fronts::EventType::LeftCusp;
        else if (tag == "R")
            type = fronts::EventType::RightCusp;
        else if (tag == "X")
            type = fronts::EventType::Crossing;
        else
            throw std::invalid_argument(path + "/0: expected \"L\", \"R\" or \"X\"");
        f.events.push_back(
            {type, static_cast<int>(require_int(e[1], path + "/1"))});
    }
    return f;
}

std::vector<mountain::Peak> link_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument(": expected an array of components");
    std::vector<mountain::Peak> comps;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "/" + std::to_string(i);
        const json& c = j[i];
        comps.push_back(mountain::Peak{require_int(require_field(c, "tb", path), path + "/tb"),
                                       require_int(require_field(c, "r", path), path + "/r")});
    }
    return comps;
}

}  // namespace legcalc::serialize
