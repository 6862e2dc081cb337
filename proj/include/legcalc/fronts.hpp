#pragma once

/**
 * @file fronts.hpp
 * @brief Combinatorial front diagrams as Morse-event words, the constructive
 *        cable/torus-link front recipes, exact tb/r/linking computation, and
 *        deterministic SVG/ASCII rendering.
 *
 * A front is read left to right as a word of events acting on a stack of
 * strands indexed bottom-to-top from 0:
 *
 *   LeftCusp(pos)   inserts two new adjacent strands at pos and pos+1;
 *   Crossing(pos)   swaps strands pos and pos+1;
 *   RightCusp(pos)  merges strands pos and pos+1 (a local maximum in x).
 *
 * The strand count starts and ends at zero.  Geometry exists only at render
 * time; every invariant is word combinatorics.  At a crossing the strand of
 * smaller slope is in front, so diagrams carry no over/under data.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "legcalc/cables.hpp"

namespace legcalc::fronts {

enum class EventType { LeftCusp, RightCusp, Crossing };

struct Event {
    EventType type = EventType::LeftCusp;
    int pos = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

struct FrontWord {
    std::vector<Event> events;

    friend bool operator==(const FrontWord&, const FrontWord&) = default;
};

/**
 * Everything derivable from a validated word: the component decomposition,
 * strand orientations, and the classical invariants.  Components are
 * numbered in order of their first left cusp.  Each component is oriented so
 * that the upper strand of its first left cusp points rightward (every
 * component of the built-in diagrams then runs clockwise).
 */
class FrontAnalysis {
  public:
    int component_count() const { return component_count_; }
    std::int64_t tb(int component) const;
    std::int64_t r(int component) const;
    std::int64_t linking(int c1, int c2) const;

    /// Component of each event (for crossings between two components, the
    /// lower strand's component; use crossing_components for both).
    const std::vector<int>& event_component() const { return event_component_; }
    /// For each event index holding a crossing: the components of the two
    /// strands involved (lower, upper before the swap), else (-1, -1).
    const std::vector<std::pair<int, int>>& crossing_components() const {
        return crossing_components_;
    }

  private:
    friend FrontAnalysis analyze(const FrontWord& f);
    int component_count_ = 0;
    std::vector<std::int64_t> tb_, r_;
    std::vector<std::vector<std::int64_t>> lk_;
    std::vector<int> event_component_;
    std::vector<std::pair<int, int>> crossing_components_;
};

/// Validates the word and computes all invariants.  Throws
/// std::invalid_argument with a description of the first defect (position
/// out of range, unbalanced strands, inconsistent closure).
FrontAnalysis analyze(const FrontWord& f);

/// Convenience wrappers over analyze().
std::int64_t tb_of_component(const FrontWord& f, int component);
std::int64_t r_of_component(const FrontWord& f, int component);
std::int64_t linking(const FrontWord& f, int c1, int c2);
int component_count(const FrontWord& f);

/// Max-tb unknot: one left cusp, one right cusp; (tb, r) = (-1, 0).
FrontWord unknot_front();

/// Figure-eight knot at its maximal Thurston-Bennequin invariant,
/// (tb, r) = (-3, 0); a fixed word.
FrontWord fig8_front();

/**
 * Adds one zigzag (a stabilization) to the single component of f at a fixed
 * canonical site: (tb, r) changes by (-1, +1) for sign +1 and (-1, -1) for
 * sign -1.  Throws on multi-component input.
 */
FrontWord stabilize(const FrontWord& f, int sign);

/// Unknot front stabilized to the requested class; requires tb <= -1 and
/// r within the unknot cone at that tb (|r| <= -tb - 1, tb + r odd).
FrontWord stabilized_unknot_front(std::int64_t tb, std::int64_t r);

/**
 * n parallel copies obtained by small vertical shifts: every left cusp
 * becomes n nested cusps, every crossing an n x n block of crossings, and
 * copies exchange one crossing near each cusp.  Each copy keeps (tb, r) of
 * the input, and every pair of copies links tb(f).  Requires a single
 * component.
 */
FrontWord n_copy(const FrontWord& f, std::int64_t n);

/**
 * Inserts `count` fundamental positive-crossing tangles on the k strands
 * [lo, lo+k) at the word position `at_event` (between events at_event-1 and
 * at_event).  Each tangle is the (k-1)-crossing staircase taking the top
 * strand to the bottom.  Throws "site-not-trivial" when fewer than lo+k
 * strands are live there.
 */
FrontWord insert_positive_twists(const FrontWord& f, int at_event, int lo, int k,
                                 std::int64_t count);

enum class TangleKind { S, Z };

/**
 * Inserts `count` fundamental cusped tangles on the p strands [lo, lo+p) at
 * `at_event`.  A Z-tangle diverts the top strand below the block through one
 * left cusp, p-1 crossings and one right cusp; an S-tangle is its mirror and
 * diverts the bottom strand above the block.  Requires 0 <= count < p.
 */
FrontWord insert_sz_tangles(const FrontWord& f, int at_event, int lo, int p,
                            TangleKind kind, std::int64_t count);

/**
 * The t-twisted n-copy: the n-copy of f with t twist tangles inserted at the
 * canonical site.  One component keeps tb(f); the other n-1 drop to
 * tb(f) - 2t; every rotation number stays r(f); every pairwise linking
 * number is tb(f) - t.  Requires t >= 1 and a single component.
 */
FrontWord twisted_n_copy(const FrontWord& f, std::int64_t n, std::int64_t t);

/**
 * The standard (np, nq)-cable front built on the base front f of the
 * companion, dispatching on the slope regime:
 *   - TbSlope / IntegralLesser: the n-copy of f (tb(f) must equal q);
 *   - Greater: np-copy of f plus n*(q - p*tb_bar) positive tangles
 *     (tb(f) must equal tb_bar);
 *   - NonintegralLesser: p-copy of f, p*ceil(q/p) - q S- or Z-tangles
 *     (kind chooses which), then the n-copy (tb(f) must equal ceil(q/p)).
 * Throws tb-mismatch when tb(f) disagrees with the regime's requirement.
 */
FrontWord standard_cable_front(const FrontWord& f, const cables::CableSpec& spec,
                               std::int64_t tb_bar, TangleKind kind = TangleKind::Z);

/// Positive-recipe torus link front: np nested unknot copies with nq twist
/// region; components are (p, q)-torus knots of tb = pq - p - q.
FrontWord torus_link_front(std::int64_t n, std::int64_t p, std::int64_t q);

enum class RenderFormat { Svg, Ascii };

/// Deterministic rendering; byte-stable for identical inputs.  ASCII uses
/// '<' and '>' for cusps and 'X' for crossings, one column per event.
std::string render(const FrontWord& f, RenderFormat format);

/// Parses the ASCII format produced by render(); inverse of rendering.
FrontWord parse_ascii(const std::string& text);

}  // namespace legcalc::fronts
