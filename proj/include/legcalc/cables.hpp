#pragma once

/**
 * @file cables.hpp
 * @brief Cable-link calculus for uniformly thick, Legendrian-simple knot
 *        types supplied as data: slope regimes, standard-cable invariants,
 *        non-destabilizable sets, realizability, ordered permutation
 *        decisions, and transverse maxima.
 *
 * The (np, nq)-cable of a knot type K consists of n parallel curves on the
 * boundary of a standard neighborhood of K, each running p times around the
 * longitude (Seifert framed) and q times around the meridian.  The behaviour
 * of the calculus is governed by how the slope q/p compares with tb_bar(K),
 * the maximal Thurston-Bennequin invariant of K.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legcalc/mountain.hpp"
#include "legcalc/torus_links.hpp"

namespace legcalc::cables {

/// A knot type described by its classical-invariant data.  The cable
/// calculus is only valid for uniformly thick, Legendrian-simple types;
/// operations refuse to run otherwise instead of guessing.
struct KnotTypeData {
    std::string name;
    mountain::MountainRange range{{mountain::Peak{-1, 0}}};
    std::int64_t tb_bar = -1;
    std::int64_t sl_bar = -1;
    bool uniformly_thick = true;
    bool legendrian_simple = true;
    /// Set when K itself is the (r, s)-cable of some knot; needed because
    /// permutation results carry an exception at cabling slope r*s.
    std::optional<std::pair<std::int64_t, std::int64_t>> cable_of;
};

/// Validates tb_bar / sl_bar against the range (both are derivable and must
/// match when supplied).  Throws std::invalid_argument.
KnotTypeData make_knot_type(std::string name, mountain::MountainRange range,
                            bool uniformly_thick, bool legendrian_simple,
                            std::optional<std::pair<std::int64_t, std::int64_t>> cable_of);

/// Built-in knot types addressable by name: "unknot", "fig8", and
/// "torus:p:q" for gcd(p,|q|) = 1, |q| > p >= 2 (q < 0 for the uniformly
/// thick negative torus knots).  Throws std::invalid_argument for unknown
/// names.
KnotTypeData builtin_knot_type(const std::string& name);

/// Cabling parameters; q may have either sign, gcd(p, |q|) = 1.
struct CableSpec {
    std::int64_t n = 1;
    std::int64_t p = 1;
    std::int64_t q = 0;
};

CableSpec make_cable_spec(std::int64_t n, std::int64_t p, std::int64_t q);

enum class SlopeRegime { Greater, TbSlope, IntegralLesser, NonintegralLesser };

std::string to_string(SlopeRegime regime);

/// Compares q/p with tb_bar(K) exactly.  Equality forces p = 1 (tb_bar is an
/// integer and gcd(p, q) = 1), hence TbSlope and IntegralLesser only occur
/// for p = 1.
SlopeRegime slope_regime(const KnotTypeData& K, const CableSpec& spec);

/// One standard cable representative.
struct CableRep {
    enum class Kind { StdCable, NCopy, Twisted };
    Kind kind = Kind::StdCable;
    /// Base Legendrian class of K the cable is built on.
    mountain::Peak base{-1, 0};
    /// +1 / -1 for the two NonintegralLesser representatives, 0 otherwise.
    int pm = 0;
    /// Twist amount for Twisted reps.
    std::int64_t t = 0;
    /// Sorted per-component invariants of the representative.
    links::LinkMultiset components;

    friend bool operator==(const CableRep&, const CableRep&) = default;
};

/**
 * The standard cable representatives prescribed by the regime formulas:
 *  - Greater: per max-tb class L of K, all components
 *      (pq - q + p*tb_bar, p*r(L));
 *  - TbSlope: per max-tb class L, all components (tb_bar, r(L));
 *  - IntegralLesser: per class L of K at tb = q, all components (q, r(L));
 *  - NonintegralLesser: per class L at tb = ceil(q/p), two reps with all
 *    components (pq, p*r(L) +- (p*ceil(q/p) - q)).
 * Requires n >= 1; single-knot cables use n = 1.
 */
std::vector<CableRep> std_cable_components(const KnotTypeData& K, const CableSpec& spec);

/**
 * All non-destabilizable representatives of the (np, nq)-cable link, n >= 2.
 * For slopes q/p above tb_bar and nonintegral lesser slopes these are exactly
 * the standard cables.  For integral slopes q <= tb_bar they are the n-copies
 * of each class at tb = q together with the t-twisted n-copies of each class
 * at tb = q + t, t > 0; the count equals the number of lattice points of
 * K.range with tb >= q.
 */
std::vector<CableRep> nondestabilizable_reps_cable(const KnotTypeData& K, const CableSpec& spec);

/// Maximal tb of a single (p, q)-cable component: pq - |p*tb_bar - q| above
/// tb_bar, pq for nonintegral lesser slopes, tb_bar for p = 1.
std::int64_t cable_max_tb_component(const KnotTypeData& K, std::int64_t p, std::int64_t q);

/// Upper bound for the sum of component tb over the n-component cable link;
/// for integral q <= tb_bar this is n*q, otherwise n * cable_max_tb_component.
std::int64_t cable_tb_sum_bound(const KnotTypeData& K, const CableSpec& spec);

/// Cone-matching realizability against every representative, as in
/// links::is_realizable.  Witnesses are returned for the yes case.
struct CableRealizability {
    bool realizable = false;
    std::vector<CableRep> witnesses;
    std::string reason;
};

CableRealizability is_realizable_cable(const KnotTypeData& K, const CableSpec& spec,
                                       const links::LinkMultiset& components);

enum class Decision { Yes, No, Unknown };

std::string to_string(Decision d);

struct PermutationDecision {
    Decision outcome = Decision::No;
    std::string reason;
};

/**
 * Ordered permutation decision for cable links.
 *  - Greater: realizable iff sigma preserves componentwise invariants.
 *  - TbSlope: sigma must fix every component with tb = tb_bar (their linear
 *    order is an invariant) and preserve invariants elsewhere.
 *  - Lesser slopes: sigma must rotate the components with tb = pq (cyclic
 *    labels supplied by the caller) and preserve invariants elsewhere.
 *  - When K is itself an (r, s)-cable and q/p = r*s the theory makes no
 *    prediction; the decision is Unknown.
 */
PermutationDecision permutation_realizable_cable(const KnotTypeData& K, const CableSpec& spec,
                                                 const links::OrderedLink& link,
                                                 const std::vector<std::int64_t>& sigma);

/// Maximal self-linking number of a single (p, q)-cable component.
std::int64_t transverse_cable_sl_max(const KnotTypeData& K, std::int64_t p, std::int64_t q);

/// Exact ceiling of q/p for p > 0.
std::int64_t ceil_div(std::int64_t q, std::int64_t p);

}  // namespace legcalc::cables
