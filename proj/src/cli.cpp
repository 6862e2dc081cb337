#include "legcalc/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "legcalc/cables.hpp"
#include "legcalc/farey.hpp"
#include "legcalc/fronts.hpp"
#include "legcalc/mountain.hpp"
#include "legcalc/serialize.hpp"
#include "legcalc/torus_links.hpp"

namespace legcalc::cli {
namespace {

using serialize::json;

json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

int parse_sign(const std::string& text) {
    if (text == "+") return +1;
    if (text == "-") return -1;
    throw std::invalid_argument("--sign must be '+' or '-', got '" + text + "'");
}

cables::KnotTypeData resolve_knot(const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty())
        throw std::invalid_argument("--knot and --knot-file are mutually exclusive");
    if (!name.empty()) return cables::builtin_knot_type(name);
    if (!file.empty()) return serialize::knot_type_from_json(read_json_file(file));
    throw std::invalid_argument("one of --knot or --knot-file is required");
}

std::vector<std::int64_t> parse_int_list(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw std::invalid_argument(std::string(what) + "/" + std::to_string(i) +
                                        ": expected an integer");
        out.push_back(j[i].get<std::int64_t>());
    }
    return out;
}

/// Components in the given order plus their cyclic labels.  A missing
/// "cyclic" field means -1; when no component carries a label and `level`
/// is supplied, the components sitting at tb = level are labelled
/// 0..k-1 in order of appearance.
std::pair<std::vector<mountain::Peak>, std::vector<std::int64_t>> parse_ordered_components(
    const json& j, std::optional<std::int64_t> level) {
    if (!j.is_array()) throw std::invalid_argument("--link: expected an array of components");
    std::vector<mountain::Peak> comps;
    std::vector<std::int64_t> labels;
    bool any_label = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "--link/" + std::to_string(i);
        const json& c = j[i];
        if (!c.is_object() || !c.contains("tb") || !c.contains("r"))
            throw std::invalid_argument(path + ": expected {\"tb\":..,\"r\":..}");
        if (!c.at("tb").is_number_integer())
            throw std::invalid_argument(path + "/tb: expected an integer");
        if (!c.at("r").is_number_integer())
            throw std::invalid_argument(path + "/r: expected an integer");
        comps.push_back(mountain::Peak{c.at("tb").get<std::int64_t>(),
                                       c.at("r").get<std::int64_t>()});
        std::int64_t label = -1;
        if (c.contains("cyclic")) {
            if (!c.at("cyclic").is_number_integer())
                throw std::invalid_argument(path + "/cyclic: expected an integer");
            label = c.at("cyclic").get<std::int64_t>();
            any_label = true;
        }
        labels.push_back(label);
    }
    if (!any_label && level) {
        std::int64_t next = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (comps[i].tb == *level) labels[i] = next++;
    }
    return {std::move(comps), std::move(labels)};
}

json spec_json(const links::TorusLinkSpec& spec) {
    return json{{"n", spec.n},
                {"p", spec.p},
                {"q", spec.q},
                {"sign", spec.sign > 0 ? "+" : "-"}};
}

json spec_json(const cables::CableSpec& spec) {
    return json{{"n", spec.n}, {"p", spec.p}, {"q", spec.q}};
}

json reps_json(const std::vector<links::NondestabRep>& reps) {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(serialize::to_json(rep));
    return arr;
}

json reps_json(const std::vector<cables::CableRep>& reps) {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(serialize::to_json(rep));
    return arr;
}

/// The invariant block shared by the `front` subcommands.
json front_report(const fronts::FrontWord& f) {
    const fronts::FrontAnalysis a = fronts::analyze(f);
    json comps = json::array();
    for (int c = 0; c < a.component_count(); ++c)
        comps.push_back(json{{"tb", a.tb(c)}, {"r", a.r(c)}});
    json lks = json::array();
    for (int c1 = 0; c1 < a.component_count(); ++c1)
        for (int c2 = c1 + 1; c2 < a.component_count(); ++c2)
            lks.push_back(json{{"a", c1}, {"b", c2}, {"lk", a.linking(c1, c2)}});
    return json{{"component_count", a.component_count()},
                {"components", comps},
                {"linking", lks},
                {"events", f.events.size()}};
}

void write_svg(const fronts::FrontWord& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << fronts::render(f, fronts::RenderFormat::Svg);
}

/// Builds the base front a standard cable sits on: the built-in max-tb front
/// of the companion, stabilized down (alternating signs, + first) to the tb
/// the slope regime requires.
fronts::FrontWord base_front_for(const std::string& knot, const cables::KnotTypeData& K,
                                 const cables::CableSpec& spec) {
    fronts::FrontWord f;
    if (knot == "unknot")
        f = fronts::unknot_front();
    else if (knot == "fig8")
        f = fronts::fig8_front();
    else
        throw std::invalid_argument("no built-in front for knot '" + knot +
                                    "'; use unknot or fig8");
    std::int64_t need = K.tb_bar;
    switch (cables::slope_regime(K, spec)) {
        case cables::SlopeRegime::Greater:
        case cables::SlopeRegime::TbSlope: need = K.tb_bar; break;
        case cables::SlopeRegime::IntegralLesser: need = spec.q; break;
        case cables::SlopeRegime::NonintegralLesser:
            need = cables::ceil_div(spec.q, spec.p);
            break;
    }
    int sign = +1;
    for (std::int64_t tb = K.tb_bar; tb > need; --tb) {
        f = fronts::stabilize(f, sign);
        sign = -sign;
    }
    return f;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classification of Legendrian/transverse torus links and cable links"};
    app.name("legcalc");
    app.require_subcommand(1);
    app.fallthrough();

    bool explain = false;
    bool force_json = false;
    app.add_flag("--explain", explain, "add a rationale naming the governing result");
    app.add_flag("--json", force_json, "machine output (the default; overrides --ascii)");

    // Shared option storage; only one leaf parses per invocation.
    std::int64_t n = 1, p = 1, q = 0, tb = 0, r = 0;
    std::string sign_text, knot_name, knot_file, link_text, link2_text, perm_text;
    std::string sl_text, kind_text = "Z", front_text, front_file, svg_path;
    std::string slope0_text, slope1_text;
    bool ascii = false;

    const auto add_npq = [&](CLI::App* cmd, bool with_sign) {
        cmd->add_option("-n", n, "number of parallel copies")->required();
        cmd->add_option("-p", p, "longitude winding p")->required();
        cmd->add_option("-q", q, "meridian winding q")->required();
        if (with_sign) cmd->add_option("--sign", sign_text, "+ or -")->required();
    };
    const auto add_knot = [&](CLI::App* cmd) {
        cmd->add_option("--knot", knot_name, "built-in knot type (unknot, fig8, torus:p:q)");
        cmd->add_option("--knot-file", knot_file, "knot type loaded from a JSON file");
    };
    const auto add_render = [&](CLI::App* cmd) {
        cmd->add_option("--svg", svg_path, "write an SVG rendering to this file");
        cmd->add_flag("--ascii", ascii, "print an ASCII rendering instead of JSON");
    };

    CLI::App* farey_cmd = app.add_subcommand("farey", "Farey graph arithmetic");
    farey_cmd->require_subcommand(1);
    farey_cmd->fallthrough();
    CLI::App* farey_path = farey_cmd->add_subcommand(
        "path", "minimal clockwise geodesic between two slopes");
    farey_path->fallthrough();
    farey_path->add_option("s0", slope0_text, "start slope, e.g. -5/3 or inf")->required();
    farey_path->add_option("s1", slope1_text, "end slope")->required();

    CLI::App* range_cmd = app.add_subcommand("range", "mountain ranges of knot types");
    range_cmd->require_subcommand(1);
    range_cmd->fallthrough();
    CLI::App* range_check =
        range_cmd->add_subcommand("check", "is (tb, r) realized by the knot type?");
    range_check->fallthrough();
    add_knot(range_check);
    range_check->add_option("--tb", tb, "Thurston-Bennequin invariant")->required();
    range_check->add_option("--r", r, "rotation number")->required();

    CLI::App* torus_cmd = app.add_subcommand("torus", "(np, +-nq)-torus links");
    torus_cmd->require_subcommand(1);
    torus_cmd->fallthrough();
    CLI::App* torus_reps =
        torus_cmd->add_subcommand("reps", "all non-destabilizable representatives");
    CLI::App* torus_realize =
        torus_cmd->add_subcommand("realize", "is an invariant multiset realizable?");
    CLI::App* torus_isotopic =
        torus_cmd->add_subcommand("isotopic", "are two realizable links isotopic?");
    CLI::App* torus_perms =
        torus_cmd->add_subcommand("perms", "is a component permutation realizable?");
    CLI::App* torus_transverse =
        torus_cmd->add_subcommand("transverse", "transverse maxima and realizability");
    for (CLI::App* cmd : {torus_reps, torus_realize, torus_isotopic, torus_perms,
                          torus_transverse}) {
        cmd->fallthrough();
        add_npq(cmd, /*with_sign=*/true);
    }
    torus_realize->add_option("--link", link_text, "JSON array of {\"tb\":..,\"r\":..}")
        ->required();
    torus_isotopic->add_option("--link", link_text, "first link, JSON array")->required();
    torus_isotopic->add_option("--link2", link2_text, "second link, JSON array")->required();
    torus_perms
        ->add_option("--link", link_text,
                     "ordered JSON array of {\"tb\",\"r\"[,\"cyclic\"]}")
        ->required();
    torus_perms->add_option("--perm", perm_text, "permutation as a JSON array")->required();
    torus_transverse->add_option("--sl", sl_text, "JSON array of self-linking numbers");

    CLI::App* cable_cmd = app.add_subcommand("cable", "(np, nq)-cables of a knot type");
    cable_cmd->require_subcommand(1);
    cable_cmd->fallthrough();
    CLI::App* cable_regime = cable_cmd->add_subcommand("regime", "slope regime of q/p");
    CLI::App* cable_reps =
        cable_cmd->add_subcommand("reps", "all non-destabilizable representatives");
    CLI::App* cable_realize =
        cable_cmd->add_subcommand("realize", "is an invariant multiset realizable?");
    CLI::App* cable_perms =
        cable_cmd->add_subcommand("perms", "is a component permutation realizable?");
    CLI::App* cable_transverse =
        cable_cmd->add_subcommand("transverse", "maximal self-linking of a cable component");
    for (CLI::App* cmd : {cable_regime, cable_reps, cable_realize, cable_perms,
                          cable_transverse}) {
        cmd->fallthrough();
        add_knot(cmd);
    }
    for (CLI::App* cmd : {cable_regime, cable_reps, cable_realize, cable_perms}) {
        cmd->add_option("-n", n, "number of parallel copies")->required();
        cmd->add_option("-p", p, "longitude winding p")->required();
        cmd->add_option("-q", q, "meridian winding q")->required();
    }
    cable_transverse->add_option("-p", p, "longitude winding p")->required();
    cable_transverse->add_option("-q", q, "meridian winding q")->required();
    cable_realize->add_option("--link", link_text, "JSON array of {\"tb\":..,\"r\":..}")
        ->required();
    cable_perms
        ->add_option("--link", link_text,
                     "ordered JSON array of {\"tb\",\"r\"[,\"cyclic\"]}")
        ->required();
    cable_perms->add_option("--perm", perm_text, "permutation as a JSON array")->required();

    CLI::App* front_cmd = app.add_subcommand("front", "front diagrams");
    front_cmd->require_subcommand(1);
    front_cmd->fallthrough();
    CLI::App* front_cable =
        front_cmd->add_subcommand("cable", "build the standard cable front");
    CLI::App* front_torus =
        front_cmd->add_subcommand("torus", "build the positive torus link front");
    CLI::App* front_invariants =
        front_cmd->add_subcommand("invariants", "analyze a front word");
    for (CLI::App* cmd : {front_cable, front_torus, front_invariants}) {
        cmd->fallthrough();
        add_render(cmd);
    }
    front_cable->add_option("--knot", knot_name, "companion with a built-in front")
        ->required();
    add_npq(front_cable, /*with_sign=*/false);
    front_cable->add_option("--kind", kind_text, "S or Z tangles for nonintegral slopes");
    add_npq(front_torus, /*with_sign=*/false);
    front_invariants->add_option("--front", front_text, "front word as inline JSON");
    front_invariants->add_option("--front-file", front_file, "front word from a JSON file");
    front_invariants->add_option("--knot", knot_name, "built-in front (unknot, fig8)");

    const auto emit = [&](json doc, const std::string& rationale) {
        if (explain && !rationale.empty()) doc["explain"] = rationale;
        out << doc.dump(2) << "\n";
    };

    // The `front` subcommands share their output plumbing: optional SVG file,
    // ASCII art or the JSON invariant report on stdout.
    const auto emit_front = [&](const fronts::FrontWord& f, json doc,
                                const std::string& rationale) {
        if (!svg_path.empty()) {
            write_svg(f, svg_path);
            doc["svg"] = svg_path;
        }
        if (ascii && !force_json) {
            out << fronts::render(f, fronts::RenderFormat::Ascii);
            return;
        }
        emit(std::move(doc), rationale);
    };

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

        if (farey_path->parsed()) {
            const farey::Slope s0 = farey::parse_slope(slope0_text);
            const farey::Slope s1 = farey::parse_slope(slope1_text);
            const farey::FareyPath path = farey::minimal_path(s0, s1);
            json verts = json::array();
            for (const farey::Slope& v : path.vertices) verts.push_back(serialize::to_json(v));
            emit(json{{"s0", farey::to_string(s0)},
                      {"s1", farey::to_string(s1)},
                      {"vertices", verts},
                      {"basic_slices", path.vertices.size() - 1}},
                 "consecutive vertices meet once on the torus, so each edge of the "
                 "minimal clockwise geodesic is one basic slice of the decomposition");
            return kExitYes;
        }

        if (range_check->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            const bool hit = mountain::contains(K.range, tb, r);
            emit(json{{"knot", K.name}, {"tb", tb}, {"r", r}, {"contains", hit}},
                 "a class is realized exactly when some peak (T, R) satisfies "
                 "T - tb >= |r - R| with T - tb = r - R mod 2: stabilizations "
                 "reach everything in the cone below a peak and nothing else");
            return hit ? kExitYes : kExitNo;
        }

        if (torus_reps->parsed()) {
            const links::TorusLinkSpec spec = links::make_spec(n, p, q, parse_sign(sign_text));
            emit(json{{"spec", spec_json(spec)},
                      {"reps", reps_json(links::nondestabilizable_reps(spec))}},
                 spec.sign > 0
                     ? "a positive torus link has a unique non-destabilizable "
                       "representative, every component at (pq - p - q, 0)"
                     : "negative torus links destabilize to components at maximal tb: "
                       "one representative per peak rotation number when the components "
                       "are knotted, and the n-copies plus twisted n-copies of the "
                       "unknot classes when p = 1");
            return kExitYes;
        }

        if (torus_realize->parsed()) {
            const links::TorusLinkSpec spec = links::make_spec(n, p, q, parse_sign(sign_text));
            const links::LinkMultiset comps = links::make_multiset(
                serialize::link_from_json(parse_json_arg(link_text, "--link")));
            const links::RealizabilityDecision d = links::is_realizable(spec, comps);
            json doc{{"spec", spec_json(spec)}, {"realizable", d.realizable}};
            if (d.realizable)
                doc["witnesses"] = reps_json(d.witnesses);
            else
                doc["reason"] = d.reason;
            emit(std::move(doc),
                 "an invariant multiset is realizable exactly when it lies in the "
                 "stabilization cone of a non-destabilizable representative, matched "
                 "slot by slot");
            return d.realizable ? kExitYes : kExitNo;
        }

        if (torus_isotopic->parsed()) {
            const links::TorusLinkSpec spec = links::make_spec(n, p, q, parse_sign(sign_text));
            const links::LinkMultiset a = links::make_multiset(
                serialize::link_from_json(parse_json_arg(link_text, "--link")));
            const links::LinkMultiset b = links::make_multiset(
                serialize::link_from_json(parse_json_arg(link2_text, "--link2")));
            const bool iso = links::unordered_isotopic(spec, a, b);
            emit(json{{"spec", spec_json(spec)}, {"isotopic", iso}},
                 "realizable Legendrian torus links are classified up to unordered "
                 "isotopy by the multiset of component (tb, r) invariants");
            return iso ? kExitYes : kExitNo;
        }

        if (torus_perms->parsed()) {
            const links::TorusLinkSpec spec = links::make_spec(n, p, q, parse_sign(sign_text));
            std::optional<std::int64_t> level;
            if (spec.sign < 0) level = -spec.p * spec.q;
            auto [comps, labels] =
                parse_ordered_components(parse_json_arg(link_text, "--link"), level);
            const links::OrderedLink link =
                links::make_ordered_link(spec, std::move(comps), std::move(labels));
            const std::vector<std::int64_t> sigma =
                parse_int_list(parse_json_arg(perm_text, "--perm"), "--perm");
            const bool ok = links::permutation_realizable(spec, link, sigma);
            emit(json{{"spec", spec_json(spec)}, {"sigma", sigma}, {"realizable", ok}},
                 spec.sign > 0
                     ? "for positive torus links every invariant-preserving permutation "
                       "is realizable"
                     : "components at tb = -pq inherit a cyclic order from the "
                       "pre-Lagrangian torus, so only rotations act on them; elsewhere "
                       "the permutation must preserve invariants");
            return ok ? kExitYes : kExitNo;
        }

        if (torus_transverse->parsed()) {
            const links::TorusLinkSpec spec = links::make_spec(n, p, q, parse_sign(sign_text));
            const std::int64_t sl_max =
                links::transverse_sl_max_component(spec.p, spec.q, spec.sign);
            json doc{{"spec", spec_json(spec)}, {"sl_max", sl_max}};
            const std::string rationale =
                "transverse torus links are classified by their self-linking numbers; "
                "a component realizes exactly the sl <= sl_max of matching parity";
            if (sl_text.empty()) {
                emit(std::move(doc), rationale);
                return kExitYes;
            }
            const std::vector<std::int64_t> sls =
                parse_int_list(parse_json_arg(sl_text, "--sl"), "--sl");
            const bool ok = links::transverse_realizable(spec, sls);
            doc["sls"] = sls;
            doc["realizable"] = ok;
            emit(std::move(doc), rationale);
            return ok ? kExitYes : kExitNo;
        }

        if (cable_regime->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            const cables::CableSpec spec = cables::make_cable_spec(n, p, q);
            emit(json{{"knot", K.name},
                      {"spec", spec_json(spec)},
                      {"tb_bar", K.tb_bar},
                      {"regime", cables::to_string(cables::slope_regime(K, spec))}},
                 "the cable calculus branches on the position of the slope q/p "
                 "relative to the maximal Thurston-Bennequin invariant of the "
                 "companion");
            return kExitYes;
        }

        if (cable_reps->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            const cables::CableSpec spec = cables::make_cable_spec(n, p, q);
            const std::vector<cables::CableRep> reps =
                spec.n >= 2 ? cables::nondestabilizable_reps_cable(K, spec)
                            : cables::std_cable_components(K, spec);
            emit(json{{"knot", K.name},
                      {"spec", spec_json(spec)},
                      {"regime", cables::to_string(cables::slope_regime(K, spec))},
                      {"reps", reps_json(reps)}},
                 "above tb_bar and at nonintegral lesser slopes the standard cables "
                 "are the only non-destabilizable representatives; at integral slopes "
                 "q <= tb_bar they are the n-copies and twisted n-copies of the "
                 "classes at tb >= q");
            return kExitYes;
        }

        if (cable_realize->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            const cables::CableSpec spec = cables::make_cable_spec(n, p, q);
            const links::LinkMultiset comps = links::make_multiset(
                serialize::link_from_json(parse_json_arg(link_text, "--link")));
            const cables::CableRealizability d = cables::is_realizable_cable(K, spec, comps);
            json doc{{"knot", K.name},
                     {"spec", spec_json(spec)},
                     {"realizable", d.realizable}};
            if (d.realizable)
                doc["witnesses"] = reps_json(d.witnesses);
            else
                doc["reason"] = d.reason;
            emit(std::move(doc),
                 "uniform thickness confines every cable to the stabilization cones "
                 "of the non-destabilizable representatives, matched slot by slot");
            return d.realizable ? kExitYes : kExitNo;
        }

        if (cable_perms->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            const cables::CableSpec spec = cables::make_cable_spec(n, p, q);
            const cables::SlopeRegime regime = cables::slope_regime(K, spec);
            std::optional<std::int64_t> level;
            if (regime == cables::SlopeRegime::IntegralLesser ||
                regime == cables::SlopeRegime::NonintegralLesser)
                level = spec.p * spec.q;
            auto [comps, labels] =
                parse_ordered_components(parse_json_arg(link_text, "--link"), level);
            const links::OrderedLink link{std::move(comps), std::move(labels)};
            const std::vector<std::int64_t> sigma =
                parse_int_list(parse_json_arg(perm_text, "--perm"), "--perm");
            const cables::PermutationDecision d =
                cables::permutation_realizable_cable(K, spec, link, sigma);
            emit(json{{"knot", K.name},
                      {"spec", spec_json(spec)},
                      {"sigma", sigma},
                      {"decision", cables::to_string(d.outcome)},
                      {"reason", d.reason}},
                 "above the maximal slope any invariant-preserving permutation works; "
                 "at the tb slope the maximal components are linearly ordered; below "
                 "it they are cyclically ordered, except that no prediction is made "
                 "at the companion's own cabling slope");
            switch (d.outcome) {
                case cables::Decision::Yes: return kExitYes;
                case cables::Decision::No: return kExitNo;
                case cables::Decision::Unknown: return kExitUnknown;
            }
        }

        if (cable_transverse->parsed()) {
            const cables::KnotTypeData K = resolve_knot(knot_name, knot_file);
            emit(json{{"knot", K.name},
                      {"p", p},
                      {"q", q},
                      {"sl_max", cables::transverse_cable_sl_max(K, p, q)}},
                 "the maximal self-linking number of a (p, q)-cable component is "
                 "pq - q + p * sl_bar of the companion");
            return kExitYes;
        }

        if (front_cable->parsed()) {
            const cables::KnotTypeData K = cables::builtin_knot_type(knot_name);
            const cables::CableSpec spec = cables::make_cable_spec(n, p, q);
            fronts::TangleKind kind = fronts::TangleKind::Z;
            if (kind_text == "S")
                kind = fronts::TangleKind::S;
            else if (kind_text != "Z")
                throw std::invalid_argument("--kind must be 'S' or 'Z', got '" + kind_text +
                                            "'");
            const fronts::FrontWord base = base_front_for(knot_name, K, spec);
            const fronts::FrontWord f =
                fronts::standard_cable_front(base, spec, K.tb_bar, kind);
            json doc{{"knot", K.name}, {"spec", spec_json(spec)}};
            doc.update(front_report(f));
            emit_front(f, std::move(doc),
                       "the standard cable recipe realizes the closed-form invariants "
                       "of its slope regime; the report is computed from the diagram");
            return kExitYes;
        }

        if (front_torus->parsed()) {
            const fronts::FrontWord f = fronts::torus_link_front(n, p, q);
            json doc{{"spec", json{{"n", n}, {"p", p}, {"q", q}, {"sign", "+"}}}};
            doc.update(front_report(f));
            emit_front(f, std::move(doc),
                       "np nested max-tb unknots with nq positive twist tangles give "
                       "the maximal positive torus link; each component is a "
                       "(p, q)-torus knot with tb = pq - p - q");
            return kExitYes;
        }

        if (front_invariants->parsed()) {
            int sources = 0;
            for (const std::string& s : {front_text, front_file, knot_name})
                if (!s.empty()) ++sources;
            if (sources != 1)
                throw std::invalid_argument(
                    "exactly one of --front, --front-file or --knot is required");
            fronts::FrontWord f;
            if (!front_text.empty())
                f = serialize::front_from_json(parse_json_arg(front_text, "--front"));
            else if (!front_file.empty())
                f = serialize::front_from_json(read_json_file(front_file));
            else if (knot_name == "unknot")
                f = fronts::unknot_front();
            else if (knot_name == "fig8")
                f = fronts::fig8_front();
            else
                throw std::invalid_argument("no built-in front for knot '" + knot_name +
                                            "'; use unknot or fig8");
            emit_front(f, front_report(f),
                       "tb = writhe - right cusps, r = half the signed cusp count, "
                       "lk = half the signed count of inter-component crossings");
            return kExitYes;
        }

        err << "error: no subcommand dispatched\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace legcalc::cli
