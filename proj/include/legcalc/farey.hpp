#pragma once

/**
 * @file farey.hpp
 * @brief Exact arithmetic on the Farey graph of slopes drawn on the boundary
 *        of a disk.
 *
 * A slope is a reduced fraction q/p together with a single point at infinity
 * (1/0).  Slopes are arranged on a circle: 0 at the top, infinity at the
 * bottom, positive slopes increasing along the right half and negative slopes
 * increasing along the left half.  "Clockwise" always refers to this layout.
 *
 * Two slopes are joined by an edge of the Farey graph when their intersection
 * number |q*p' - q'*p| equals one.  All functions use integer arithmetic
 * only; nothing here ever rounds.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace legcalc::farey {

/// Reduced fraction num/den with den >= 0; infinity is stored as 1/0.
struct Slope {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Slope&, const Slope&) = default;
};

/// Normalizes an arbitrary fraction: reduces, forces den >= 0, and collapses
/// every n/0 to the single point 1/0.  Throws std::domain_error on 0/0.
Slope make_slope(std::int64_t num, std::int64_t den);

/// The point at infinity, 1/0.
Slope infinity_slope();

bool is_infinite(const Slope& s);

/// Renders "q/p", plain "q" for integers, or "inf".
std::string to_string(const Slope& s);

/// Parses the formats produced by to_string.  Throws std::invalid_argument.
Slope parse_slope(const std::string& text);

/// |q*p' - q'*p| for s = q/p and t = q'/p'.
std::int64_t intersection_number(const Slope& s, const Slope& t);

/// True when the two slopes span an edge of the Farey graph.
bool is_edge(const Slope& s, const Slope& t);

/**
 * Freshman sum (a.num + b.num)/(a.den + b.den), reduced.
 *
 * When one argument is infinity it is expanded as +1/0 or -1/0, whichever
 * side of the disk the other argument lies on (0 counts as the positive
 * side), so the result always lands between the two inputs on the circle.
 * Taking the mediant of a slope with itself is undefined and throws
 * std::domain_error.
 */
Slope mediant(const Slope& a, const Slope& b);

/**
 * True when s lies on the closed clockwise arc from s0 to s1.
 * Both endpoints are contained; with s0 == s1 the arc degenerates to a point.
 */
bool clockwise_contains(const Slope& s0, const Slope& s1, const Slope& s);

/// A walk in the Farey graph; consecutive vertices are always edges.
struct FareyPath {
    std::vector<Slope> vertices;

    friend bool operator==(const FareyPath&, const FareyPath&) = default;
};

/**
 * The unique shortest Farey-graph path from s0 to s1 whose vertices are
 * strictly ordered along the clockwise arc from s0 to s1.
 *
 * The path starts at s0, ends at s1, and every consecutive pair is an edge.
 * When s0 and s1 are themselves an edge the result is just [s0, s1].
 * Throws std::domain_error when s0 == s1.
 */
FareyPath minimal_path(const Slope& s0, const Slope& s1);

}  // namespace legcalc::farey
