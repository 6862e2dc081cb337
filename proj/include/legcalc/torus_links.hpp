#pragma once

/**
 * @file torus_links.hpp
 * @brief Classification of Legendrian and transverse (np, +-nq)-torus links:
 *        non-destabilizable representatives, realizability of invariant
 *        multisets, unordered isotopy, ordered permutation decisions, and
 *        destabilization targets.
 *
 * A (np, +-nq)-torus link has n parallel components, each a (p, +-q)-torus
 * knot.  Conventions: q >= p >= 1, gcd(p, q) = 1, n >= 2, and all components
 * oriented consistently, so pairwise linking is +-pq.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legcalc/mountain.hpp"

namespace legcalc::links {

/// Which (np, +-nq)-torus link family is being discussed.
struct TorusLinkSpec {
    std::int64_t n = 2;
    std::int64_t p = 1;
    std::int64_t q = 1;
    int sign = 1;  // +1 or -1
};

/// Validates n >= 2, q >= p >= 1, gcd(p, q) = 1, q > p for negative p >= 2.
/// Throws std::invalid_argument.
TorusLinkSpec make_spec(std::int64_t n, std::int64_t p, std::int64_t q, int sign);

/// The classical invariants of one component; tb + r must be odd.
using ComponentInvariants = mountain::Peak;

/// Unordered collection of component invariants; kept sorted so that multiset
/// comparison is plain equality.
using LinkMultiset = std::vector<ComponentInvariants>;

LinkMultiset make_multiset(std::vector<ComponentInvariants> components);

/// A link with remembered component order.  For negative links the components
/// of maximal tb = -pq additionally carry their cyclic position on the
/// pre-Lagrangian torus, supplied by the caller as labels 0..k-1.
struct OrderedLink {
    std::vector<ComponentInvariants> components;
    /// cyclic_labels[i] is the position of component i among the max-tb
    /// components; -1 everywhere else.  Use make_ordered_link to validate.
    std::vector<std::int64_t> cyclic_labels;
};

/// Validates the label domain: labels must sit exactly on the components with
/// tb = -pq (negative sign) and be a permutation of 0..k-1; positive links
/// must carry no labels.  Throws std::invalid_argument.
OrderedLink make_ordered_link(const TorusLinkSpec& spec,
                              std::vector<ComponentInvariants> components,
                              std::vector<std::int64_t> cyclic_labels);

enum class RepKind { PosMax, NegKnottedMax, NCopy, Twisted };

/// A non-destabilizable Legendrian representative of the link family.
struct NondestabRep {
    RepKind kind = RepKind::PosMax;
    std::int64_t t = 0;   // twist amount, Twisted only
    std::int64_t r0 = 0;  // rotation number parameter (unused for PosMax)
    /// The invariant multiset of the representative, sorted.
    LinkMultiset components;

    friend bool operator==(const NondestabRep&, const NondestabRep&) = default;
};

std::string to_string(RepKind kind);

/**
 * All non-destabilizable representatives:
 *  - sign +: the single rep with every component (pq - p - q, 0);
 *  - sign -, p >= 2: one rep per peak rotation r0 of the (p, -q)-torus knot,
 *    every component (-pq, r0);
 *  - sign -, p = 1: the n-copies of every unknot class at tb = -q plus the
 *    t-twisted n-copies of every unknot class at tb = -q + t, 1 <= t <= q-1;
 *    q(q+1)/2 reps in total.
 */
std::vector<NondestabRep> nondestabilizable_reps(const TorusLinkSpec& spec);

/// Total Thurston-Bennequin number of the link: sum of component tb plus
/// sign * (n-1) * n * p * q from the pairwise linking.
std::int64_t total_tb(const TorusLinkSpec& spec, const LinkMultiset& components);

/// Upper bound for the sum of component tb: n(pq - p - q) for positive links,
/// -npq for negative ones.
std::int64_t max_component_tb_sum(const TorusLinkSpec& spec);

struct RealizabilityDecision {
    bool realizable = false;
    /// All representatives whose stabilization cone (with slot matching)
    /// contains the queried multiset; nonempty iff realizable.
    std::vector<NondestabRep> witnesses;
    std::string reason;  // set when not realizable
};

/// Whether the invariant multiset is attained by a Legendrian link of the
/// family, by checking cone membership against every representative.
RealizabilityDecision is_realizable(const TorusLinkSpec& spec, const LinkMultiset& components);

/// Unordered Legendrian isotopy: realizable links are isotopic iff their
/// invariant multisets agree.  Throws std::invalid_argument naming the
/// offending side when an input is not realizable.
bool unordered_isotopic(const TorusLinkSpec& spec, const LinkMultiset& a, const LinkMultiset& b);

/// All representatives the link destabilizes to.  Throws on unrealizable
/// input.
std::vector<NondestabRep> common_destabilizations(const TorusLinkSpec& spec,
                                                  const LinkMultiset& components);

/**
 * Ordered realizability of a permutation sigma (as the list sigma[i] = image
 * of position i).  Positive links: true iff sigma preserves every component's
 * invariants.  Negative links: sigma must map the max-tb index set I1 to
 * itself acting as a rotation of the cyclic labels, and preserve invariants
 * on the complement.
 */
bool permutation_realizable(const TorusLinkSpec& spec, const OrderedLink& link,
                            const std::vector<std::int64_t>& sigma);

/// Number of realizable permutations; n <= 9 guard against factorial blowup.
std::int64_t realizable_permutation_count(const TorusLinkSpec& spec, const OrderedLink& link);

/// Maximal self-linking number of a component: sign * q * (p - 1) - p.
std::int64_t transverse_sl_max_component(std::int64_t p, std::int64_t q, int sign);

/// Transverse realizability: every sl <= sl_max with matching parity.
bool transverse_realizable(const TorusLinkSpec& spec, const std::vector<std::int64_t>& sls);

}  // namespace legcalc::links
