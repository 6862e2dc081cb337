#include "legcalc/cables.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace legcalc::cables {

namespace {

using mountain::Peak;

std::string class_str(const Peak& c) {
    return "(" + std::to_string(c.tb) + ", " + std::to_string(c.r) + ")";
}

/// Classes of the range at one exact tb level, r ascending.
std::vector<Peak> classes_at_level(const mountain::MountainRange& range, std::int64_t tb) {
    std::vector<Peak> out;
    for (const Peak& c : mountain::lattice_points_at_or_above(range, tb))
        if (c.tb == tb) out.push_back(c);
    return out;
}

void require_assumptions(const KnotTypeData& K) {
    if (!K.uniformly_thick)
        throw std::domain_error("knot type '" + K.name +
                                "' is not uniformly thick; the cable calculus does not apply");
    if (!K.legendrian_simple)
        throw std::domain_error("knot type '" + K.name +
                                "' is not Legendrian simple; the cable calculus does not apply");
}

/// High/low slot matching, identical to the torus-link case: a twisted rep
/// has one high slot and n-1 equal low slots, every other rep is uniform.
bool fits_rep(const CableRep& rep, const links::LinkMultiset& comps) {
    if (rep.kind == CableRep::Kind::Twisted) {
        const Peak high = rep.components.back();
        const Peak low = rep.components.front();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!mountain::in_cone(high, comps[i].tb, comps[i].r)) continue;
            bool rest_ok = true;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                if (!mountain::in_cone(low, comps[j].tb, comps[j].r)) {
                    rest_ok = false;
                    break;
                }
            }
            if (rest_ok) return true;
        }
        return false;
    }
    const Peak slot = rep.components.front();
    return std::all_of(comps.begin(), comps.end(),
                       [&](const Peak& c) { return mountain::in_cone(slot, c.tb, c.r); });
}

void check_permutation(const std::vector<std::int64_t>& sigma, std::size_t n) {
    if (sigma.size() != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (std::int64_t v : sigma) {
        if (v < 0 || v >= static_cast<std::int64_t>(n) || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

std::int64_t ceil_div(std::int64_t q, std::int64_t p) {
    if (p <= 0) throw std::invalid_argument("ceil_div needs a positive divisor");
    std::int64_t d = q / p;
    if (q % p != 0 && q > 0) ++d;
    return d;
}

KnotTypeData make_knot_type(std::string name, mountain::MountainRange range,
                            bool uniformly_thick, bool legendrian_simple,
                            std::optional<std::pair<std::int64_t, std::int64_t>> cable_of) {
    KnotTypeData K;
    K.name = std::move(name);
    K.tb_bar = range.max_tb();
    K.sl_bar = INT64_MIN;
    for (const Peak& c : range.peaks()) K.sl_bar = std::max(K.sl_bar, c.tb - c.r);
    K.range = std::move(range);
    K.uniformly_thick = uniformly_thick;
    K.legendrian_simple = legendrian_simple;
    K.cable_of = cable_of;
    return K;
}

KnotTypeData builtin_knot_type(const std::string& name) {
    if (name == "unknot")
        return make_knot_type("unknot", mountain::MountainRange({Peak{-1, 0}}), true, true,
                              std::nullopt);
    if (name == "fig8")
        return make_knot_type("fig8", mountain::MountainRange({Peak{-3, 0}}), true, true,
                              std::nullopt);
    if (name.rfind("torus:", 0) == 0) {
        const std::size_t sep = name.find(':', 6);
        if (sep == std::string::npos)
            throw std::invalid_argument("torus knot name must look like torus:p:q");
        std::int64_t p = 0, q = 0;
        try {
            p = std::stoll(name.substr(6, sep - 6));
            q = std::stoll(name.substr(sep + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("torus knot name must look like torus:p:q");
        }
        if (p < 2 || std::abs(q) <= p || std::gcd(p, std::abs(q)) != 1)
            throw std::invalid_argument("torus knot needs |q| > p >= 2 coprime");
        const int sign = q < 0 ? -1 : +1;
        return make_knot_type(name, mountain::torus_knot_range(p, std::abs(q), sign),
                              /*uniformly_thick=*/sign < 0, /*legendrian_simple=*/true,
                              std::make_pair(p, q));
    }
    throw std::invalid_argument("unknown knot type '" + name +
                                "'; built-ins are unknot, fig8, torus:p:q");
}

CableSpec make_cable_spec(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (n < 1) throw std::invalid_argument("cable needs n >= 1");
    if (p < 1) throw std::invalid_argument("cable needs p >= 1");
    if (std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable needs gcd(p, |q|) = 1");
    return CableSpec{n, p, q};
}

std::string to_string(SlopeRegime regime) {
    switch (regime) {
        case SlopeRegime::Greater: return "greater";
        case SlopeRegime::TbSlope: return "tb-slope";
        case SlopeRegime::IntegralLesser: return "integral-lesser";
        case SlopeRegime::NonintegralLesser: return "nonintegral-lesser";
    }
    throw std::invalid_argument("bad SlopeRegime");
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    throw std::invalid_argument("bad Decision");
}

SlopeRegime slope_regime(const KnotTypeData& K, const CableSpec& spec) {
    // q/p vs tb_bar by cross-multiplication; p >= 1.
    if (spec.q > K.tb_bar * spec.p) return SlopeRegime::Greater;
    if (spec.q == K.tb_bar * spec.p) return SlopeRegime::TbSlope;  // forces p = 1
    return spec.p == 1 ? SlopeRegime::IntegralLesser : SlopeRegime::NonintegralLesser;
}

std::vector<CableRep> std_cable_components(const KnotTypeData& K, const CableSpec& spec) {
    require_assumptions(K);
    const std::size_t n = static_cast<std::size_t>(spec.n);
    std::vector<CableRep> out;
    switch (slope_regime(K, spec)) {
        case SlopeRegime::Greater: {
            const std::int64_t tb = spec.p * spec.q - spec.q + spec.p * K.tb_bar;
            for (const Peak& L : K.range.max_tb_peaks())
                out.push_back({CableRep::Kind::StdCable, L, 0, 0,
                               links::LinkMultiset(n, Peak{tb, spec.p * L.r})});
            return out;
        }
        case SlopeRegime::TbSlope: {
            for (const Peak& L : K.range.max_tb_peaks())
                out.push_back({CableRep::Kind::StdCable, L, 0, 0,
                               links::LinkMultiset(n, Peak{K.tb_bar, L.r})});
            return out;
        }
        case SlopeRegime::IntegralLesser: {
            for (const Peak& L : classes_at_level(K.range, spec.q))
                out.push_back({CableRep::Kind::StdCable, L, 0, 0,
                               links::LinkMultiset(n, Peak{spec.q, L.r})});
            return out;
        }
        case SlopeRegime::NonintegralLesser: {
            const std::int64_t level = ceil_div(spec.q, spec.p);
            const std::int64_t s = spec.p * level - spec.q;
            for (const Peak& L : classes_at_level(K.range, level))
                for (int pm : {-1, +1})
                    out.push_back({CableRep::Kind::StdCable, L, pm, 0,
                                   links::LinkMultiset(
                                       n, Peak{spec.p * spec.q, spec.p * L.r + pm * s})});
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<CableRep> nondestabilizable_reps_cable(const KnotTypeData& K,
                                                   const CableSpec& spec) {
    require_assumptions(K);
    if (spec.n < 2) throw std::invalid_argument("cable links need n >= 2");
    const SlopeRegime regime = slope_regime(K, spec);
    if (regime == SlopeRegime::Greater || regime == SlopeRegime::NonintegralLesser)
        return std_cable_components(K, spec);

    // Integral slope q <= tb_bar: n-copies of every class at tb = q plus the
    // t-twisted n-copies of every class above that level.
    std::vector<CableRep> out;
    for (const Peak& L : classes_at_level(K.range, spec.q))
        out.push_back({CableRep::Kind::NCopy, L, 0, 0,
                       links::LinkMultiset(static_cast<std::size_t>(spec.n), L)});
    for (std::int64_t t = 1; spec.q + t <= K.range.max_tb(); ++t)
        for (const Peak& L : classes_at_level(K.range, spec.q + t)) {
            links::LinkMultiset comps(static_cast<std::size_t>(spec.n - 1),
                                      Peak{spec.q - t, L.r});
            comps.push_back(L);
            out.push_back({CableRep::Kind::Twisted, L, 0, t,
                           links::make_multiset(std::move(comps))});
        }
    return out;
}

std::int64_t cable_max_tb_component(const KnotTypeData& K, std::int64_t p, std::int64_t q) {
    require_assumptions(K);
    if (p < 1 || std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable needs p >= 1, gcd(p, |q|) = 1");
    if (p == 1) return K.tb_bar;  // the (1, q)-cable is K itself
    if (q > K.tb_bar * p) return p * q - std::abs(p * K.tb_bar - q);
    return p * q;
}

std::int64_t cable_tb_sum_bound(const KnotTypeData& K, const CableSpec& spec) {
    if (spec.p == 1 && spec.q <= K.tb_bar) return spec.n * spec.q;
    return spec.n * cable_max_tb_component(K, spec.p, spec.q);
}

CableRealizability is_realizable_cable(const KnotTypeData& K, const CableSpec& spec,
                                       const links::LinkMultiset& components) {
    if (components.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("component count does not match n");
    const links::LinkMultiset sorted = links::make_multiset(components);

    CableRealizability d;
    for (const CableRep& rep : nondestabilizable_reps_cable(K, spec))
        if (fits_rep(rep, sorted)) d.witnesses.push_back(rep);
    d.realizable = !d.witnesses.empty();
    if (d.realizable) return d;

    std::int64_t sum = 0;
    for (const Peak& c : sorted) sum += c.tb;
    const std::int64_t bound = cable_tb_sum_bound(K, spec);
    if (sum > bound) {
        d.reason = "component tb sum " + std::to_string(sum) + " exceeds the maximum " +
                   std::to_string(bound);
        return d;
    }
    if (slope_regime(K, spec) == SlopeRegime::IntegralLesser ||
        slope_regime(K, spec) == SlopeRegime::TbSlope) {
        for (const Peak& c : sorted) {
            const std::int64_t t = c.tb - spec.q;
            if (t <= 0) continue;
            for (const Peak& other : sorted) {
                if (&other == &c) continue;
                if (other.tb > spec.q - t) {
                    d.reason = "component " + class_str(c) + " at tb = q + " +
                               std::to_string(t) + " forces the others to tb <= " +
                               std::to_string(spec.q - t) + ", violated by " +
                               class_str(other);
                    return d;
                }
            }
        }
    }
    d.reason = "no non-destabilizable representative's cones admit the multiset";
    return d;
}

PermutationDecision permutation_realizable_cable(const KnotTypeData& K, const CableSpec& spec,
                                                 const links::OrderedLink& link,
                                                 const std::vector<std::int64_t>& sigma) {
    const std::size_t n = link.components.size();
    check_permutation(sigma, n);
    if (link.cyclic_labels.size() != n)
        throw std::invalid_argument("cyclic label list must match the component list");
    if (!is_realizable_cable(K, spec, links::make_multiset(link.components)).realizable)
        throw std::invalid_argument("underlying link is not realizable");

    // The theory is silent when K is itself a cable and the queried slope
    // equals its own cabling slope.
    if (K.cable_of) {
        const auto [r, s] = *K.cable_of;
        if (spec.q == r * s * spec.p)
            return {Decision::Unknown,
                    "slope q/p equals the cabling slope " + std::to_string(r) + "*" +
                        std::to_string(s) + " of '" + K.name + "'; no prediction"};
    }

    for (std::size_t i = 0; i < n; ++i)
        if (link.components[static_cast<std::size_t>(sigma[i])] != link.components[i])
            return {Decision::No, "invariants are not preserved componentwise"};

    const SlopeRegime regime = slope_regime(K, spec);
    if (regime == SlopeRegime::Greater)
        return {Decision::Yes, "above the maximal slope any invariant-preserving "
                               "permutation is realizable"};

    // The distinguished level whose components carry order data.
    const std::int64_t level =
        regime == SlopeRegime::TbSlope ? K.tb_bar : spec.p * spec.q;
    std::vector<std::size_t> I1;
    for (std::size_t i = 0; i < n; ++i)
        if (link.components[i].tb == level) I1.push_back(i);

    if (regime == SlopeRegime::TbSlope) {
        for (std::size_t i : I1)
            if (sigma[i] != static_cast<std::int64_t>(i))
                return {Decision::No, "the linear order of the tb-maximal components "
                                      "is an invariant; only the identity acts on them"};
        return {Decision::Yes, "identity on the tb-maximal components, invariants "
                               "preserved elsewhere"};
    }

    // Lesser slopes: rotations with respect to the cyclic labels.
    const std::int64_t k = static_cast<std::int64_t>(I1.size());
    std::int64_t shift = -1;
    for (std::size_t i : I1) {
        const std::size_t image = static_cast<std::size_t>(sigma[i]);
        if (link.components[image].tb != level)
            return {Decision::No, "the components on the cabling level must stay on it"};
        if (link.cyclic_labels[i] < 0 || link.cyclic_labels[image] < 0)
            throw std::invalid_argument("components on the cabling level need cyclic labels");
        const std::int64_t here =
            ((link.cyclic_labels[image] - link.cyclic_labels[i]) % k + k) % k;
        if (shift == -1)
            shift = here;
        else if (here != shift)
            return {Decision::No, "only cyclic rotations of the cabling-level "
                                  "components are realizable"};
    }
    return {Decision::Yes, "a rotation of the cabling-level components, invariants "
                           "preserved elsewhere"};
}

std::int64_t transverse_cable_sl_max(const KnotTypeData& K, std::int64_t p, std::int64_t q) {
    require_assumptions(K);
    if (p < 1 || std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable needs p >= 1, gcd(p, |q|) = 1");
    // One closed form covers every regime.  For p = 1 it reduces to sl_bar
    // (the cable is K).  For lesser nonintegral slopes it equals
    // max(tb - r) over the two standard reps built on the base classes at
    // ceil(q/p): with s = p*ceil(q/p) - q and the base rotation minimized at
    // ceil(q/p) - sl_bar, the maximum pq - p(ceil(q/p) - sl_bar) + s
    // simplifies to the same expression.  Instantiating K = unknot recovers
    // the classical torus-knot value -q(p-1) - p for negative q.
    return p * q - q + p * K.sl_bar;
}

}  // namespace legcalc::cables
