#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force reference implementations used only by the test suite.
 *
 * Everything in here trades speed for obviousness: exhaustive enumeration and
 * breadth-first search with no closed forms, so the production code can be
 * checked against an independent computation.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "legcalc/farey.hpp"

namespace testsupport {

using legcalc::farey::Slope;

/// All reduced slopes with 1 <= den <= max_den whose value lies in the closed
/// interval [lo, hi] (slopes compared exactly), plus any of the listed extras.
inline std::vector<Slope> slopes_in_band(std::int64_t lo_num, std::int64_t lo_den,
                                         std::int64_t hi_num, std::int64_t hi_den,
                                         std::int64_t max_den) {
    std::vector<Slope> out;
    for (std::int64_t p = 1; p <= max_den; ++p) {
        // q/p >= lo  <=>  q*lo_den >= lo_num*p  (lo_den > 0)
        for (std::int64_t q = -(max_den + 1) * 16; q <= (max_den + 1) * 16; ++q) {
            if (std::gcd(q < 0 ? -q : q, p) != 1) continue;
            if (q * lo_den < lo_num * p) continue;
            if (q * hi_den > hi_num * p) continue;
            out.push_back(legcalc::farey::make_slope(q, p));
        }
    }
    std::sort(out.begin(), out.end(), [](const Slope& a, const Slope& b) {
        return a.num * b.den < b.num * a.den;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Shortest path length from s0 to s1 in the Farey graph restricted to the
/// given vertex set, by plain BFS; returns -1 when unreachable.  Vertex count
/// is expected to be small (hundreds), so adjacency is tested pairwise.
inline int farey_bfs_distance(const std::vector<Slope>& universe, const Slope& s0,
                              const Slope& s1) {
    const int n = static_cast<int>(universe.size());
    int start = -1, goal = -1;
    for (int i = 0; i < n; ++i) {
        if (universe[i] == s0) start = i;
        if (universe[i] == s1) goal = i;
    }
    if (start < 0 || goal < 0) return -1;
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        if (v == goal) return dist[v];
        for (int w = 0; w < n; ++w) {
            if (dist[w] == -1 && legcalc::farey::is_edge(universe[v], universe[w])) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist[goal];
}

}  // namespace testsupport
