#include "legcalc/torus_links.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace legcalc::links {

namespace {

using mountain::Peak;
using mountain::in_cone;

bool odd(std::int64_t v) { return ((v % 2) + 2) % 2 == 1; }

std::string class_str(const Peak& c) {
    return "(" + std::to_string(c.tb) + ", " + std::to_string(c.r) + ")";
}

/// Validates a permutation of 0..n-1 given as the image list.
void check_permutation(const std::vector<std::int64_t>& sigma, std::size_t n) {
    if (sigma.size() != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (std::int64_t v : sigma) {
        if (v < 0 || v >= static_cast<std::int64_t>(n) || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

/// Slot-matching test: does the multiset fit the rep's cones?  All slots of a
/// rep agree except the single high slot of a twisted rep, so matching is
/// either uniform or a choice of which component takes the high slot.
bool fits_rep(const NondestabRep& rep, const LinkMultiset& comps) {
    if (rep.kind == RepKind::Twisted) {
        // rep.components is sorted ascending: low slots first, high slot last.
        const Peak high = rep.components.back();
        const Peak low = rep.components.front();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!in_cone(high, comps[i].tb, comps[i].r)) continue;
            bool rest_ok = true;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                if (!in_cone(low, comps[j].tb, comps[j].r)) {
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
                       [&](const Peak& c) { return in_cone(slot, c.tb, c.r); });
}

}  // namespace

TorusLinkSpec make_spec(std::int64_t n, std::int64_t p, std::int64_t q, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (n < 2) throw std::invalid_argument("a torus link needs n >= 2 components");
    if (p < 1 || q < p) throw std::invalid_argument("torus link needs q >= p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus link needs gcd(p, q) = 1");
    if (p >= 2 && q == p) throw std::invalid_argument("torus link needs q > p when p >= 2");
    return TorusLinkSpec{n, p, q, sign};
}

LinkMultiset make_multiset(std::vector<ComponentInvariants> components) {
    for (const Peak& c : components) {
        if (!odd(c.tb + c.r))
            throw std::invalid_argument("component " + class_str(c) + ": tb + r must be odd");
    }
    std::sort(components.begin(), components.end());
    return components;
}

OrderedLink make_ordered_link(const TorusLinkSpec& spec,
                              std::vector<ComponentInvariants> components,
                              std::vector<std::int64_t> cyclic_labels) {
    if (components.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("component count does not match n");
    for (const Peak& c : components) {
        if (!odd(c.tb + c.r))
            throw std::invalid_argument("component " + class_str(c) + ": tb + r must be odd");
    }
    if (cyclic_labels.size() != components.size())
        throw std::invalid_argument("cyclic label list must match the component list");

    std::vector<std::int64_t> labels_seen;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const bool at_level = spec.sign < 0 && components[i].tb == -spec.p * spec.q;
        if (at_level) {
            if (cyclic_labels[i] < 0)
                throw std::invalid_argument(
                    "component " + class_str(components[i]) +
                    " sits at tb = -pq and needs a cyclic label");
            labels_seen.push_back(cyclic_labels[i]);
        } else if (cyclic_labels[i] != -1) {
            throw std::invalid_argument("component " + class_str(components[i]) +
                                        " must carry label -1");
        }
    }
    std::vector<std::int64_t> sorted = labels_seen;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<std::int64_t>(i))
            throw std::invalid_argument("cyclic labels must be a permutation of 0..k-1");
    return OrderedLink{std::move(components), std::move(cyclic_labels)};
}

std::string to_string(RepKind kind) {
    switch (kind) {
        case RepKind::PosMax: return "posmax";
        case RepKind::NegKnottedMax: return "negmax";
        case RepKind::NCopy: return "ncopy";
        case RepKind::Twisted: return "twisted";
    }
    throw std::invalid_argument("bad RepKind");
}

std::vector<NondestabRep> nondestabilizable_reps(const TorusLinkSpec& spec) {
    std::vector<NondestabRep> out;
    if (spec.sign > 0) {
        const std::int64_t tb = spec.p * spec.q - spec.p - spec.q;
        out.push_back({RepKind::PosMax, 0, 0,
                       LinkMultiset(static_cast<std::size_t>(spec.n), Peak{tb, 0})});
        return out;
    }
    if (spec.p >= 2) {
        const mountain::MountainRange range = mountain::torus_knot_range(spec.p, spec.q, -1);
        for (const Peak& peak : range.peaks()) {
            out.push_back({RepKind::NegKnottedMax, 0, peak.r,
                           LinkMultiset(static_cast<std::size_t>(spec.n), peak)});
        }
        return out;
    }
    // p = 1: unknotted components.
    for (const Peak& c : mountain::unknot_classes_at(-spec.q))
        out.push_back({RepKind::NCopy, 0, c.r,
                       LinkMultiset(static_cast<std::size_t>(spec.n), c)});
    for (std::int64_t t = 1; t <= spec.q - 1; ++t) {
        for (const Peak& c : mountain::unknot_classes_at(-spec.q + t)) {
            LinkMultiset comps(static_cast<std::size_t>(spec.n - 1),
                               Peak{-spec.q - t, c.r});
            comps.push_back(Peak{-spec.q + t, c.r});
            out.push_back({RepKind::Twisted, t, c.r, make_multiset(std::move(comps))});
        }
    }
    return out;
}

std::int64_t total_tb(const TorusLinkSpec& spec, const LinkMultiset& components) {
    std::int64_t sum = 0;
    for (const Peak& c : components) sum += c.tb;
    return sum + spec.sign * (spec.n - 1) * spec.n * spec.p * spec.q;
}

std::int64_t max_component_tb_sum(const TorusLinkSpec& spec) {
    if (spec.sign > 0) return spec.n * (spec.p * spec.q - spec.p - spec.q);
    return -spec.n * spec.p * spec.q;
}

RealizabilityDecision is_realizable(const TorusLinkSpec& spec, const LinkMultiset& components) {
    if (components.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("component count does not match n");
    LinkMultiset sorted = make_multiset(components);

    RealizabilityDecision d;
    for (const NondestabRep& rep : nondestabilizable_reps(spec))
        if (fits_rep(rep, sorted)) d.witnesses.push_back(rep);
    d.realizable = !d.witnesses.empty();
    if (d.realizable) return d;

    std::int64_t sum = 0;
    for (const Peak& c : sorted) sum += c.tb;
    if (sum > max_component_tb_sum(spec)) {
        d.reason = "component tb sum " + std::to_string(sum) +
                   " exceeds the maximum " + std::to_string(max_component_tb_sum(spec));
        return d;
    }
    if (spec.sign < 0 && spec.p == 1) {
        // Look for a violated high/low trade-off: a component above -q forces
        // every other component at or below its mirror level.
        for (const Peak& c : sorted) {
            const std::int64_t t = c.tb + spec.q;
            if (t <= 0) continue;
            for (const Peak& other : sorted) {
                if (&other == &c) continue;
                if (other.tb > -spec.q - t) {
                    d.reason = "component " + class_str(c) + " at tb = -q + " +
                               std::to_string(t) + " forces the others to tb <= " +
                               std::to_string(-spec.q - t) + ", violated by " +
                               class_str(other);
                    return d;
                }
            }
        }
    }
    d.reason = "no non-destabilizable representative's cones admit the multiset";
    return d;
}

bool unordered_isotopic(const TorusLinkSpec& spec, const LinkMultiset& a, const LinkMultiset& b) {
    if (!is_realizable(spec, a).realizable)
        throw std::invalid_argument("first link is not realizable");
    if (!is_realizable(spec, b).realizable)
        throw std::invalid_argument("second link is not realizable");
    return make_multiset(a) == make_multiset(b);
}

std::vector<NondestabRep> common_destabilizations(const TorusLinkSpec& spec,
                                                  const LinkMultiset& components) {
    RealizabilityDecision d = is_realizable(spec, components);
    if (!d.realizable) throw std::invalid_argument("link is not realizable: " + d.reason);
    return d.witnesses;
}

bool permutation_realizable(const TorusLinkSpec& spec, const OrderedLink& link,
                            const std::vector<std::int64_t>& sigma) {
    const std::size_t n = link.components.size();
    check_permutation(sigma, n);
    if (!is_realizable(spec, make_multiset(link.components)).realizable)
        throw std::invalid_argument("underlying link is not realizable");

    // Invariants must be preserved position by position.
    for (std::size_t i = 0; i < n; ++i)
        if (link.components[static_cast<std::size_t>(sigma[i])] != link.components[i])
            return false;

    if (spec.sign > 0) return true;

    // Negative links: components on the tb = -pq level can only be permuted
    // cyclically, in the order recorded by their labels.
    std::vector<std::size_t> level;  // indices with tb = -pq
    for (std::size_t i = 0; i < n; ++i)
        if (link.components[i].tb == -spec.p * spec.q) level.push_back(i);
    const std::int64_t k = static_cast<std::int64_t>(level.size());
    if (k == 0) return true;

    std::int64_t shift = -1;
    for (std::size_t i : level) {
        const std::size_t image = static_cast<std::size_t>(sigma[i]);
        if (link.components[image].tb != -spec.p * spec.q) return false;
        const std::int64_t here =
            ((link.cyclic_labels[image] - link.cyclic_labels[i]) % k + k) % k;
        if (shift == -1)
            shift = here;
        else if (here != shift)
            return false;
    }
    return true;
}

std::int64_t realizable_permutation_count(const TorusLinkSpec& spec, const OrderedLink& link) {
    const std::size_t n = link.components.size();
    if (n > 9) throw std::invalid_argument("permutation count limited to n <= 9");
    std::vector<std::int64_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::int64_t count = 0;
    do {
        if (permutation_realizable(spec, link, sigma)) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

std::int64_t transverse_sl_max_component(std::int64_t p, std::int64_t q, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (p < 1 || q < p || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus knot needs q >= p >= 1 coprime");
    return sign * q * (p - 1) - p;
}

bool transverse_realizable(const TorusLinkSpec& spec, const std::vector<std::int64_t>& sls) {
    if (sls.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("component count does not match n");
    const std::int64_t sl_max = transverse_sl_max_component(spec.p, spec.q, spec.sign);
    for (std::int64_t sl : sls) {
        if (!odd(sl)) throw std::invalid_argument("self-linking numbers here are odd");
        if (sl > sl_max) return false;
    }
    return true;
}

}  // namespace legcalc::links
