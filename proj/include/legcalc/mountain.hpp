#pragma once

/**
 * @file mountain.hpp
 * @brief Mountain ranges: the lattices of (tb, r) values realized by the
 *        Legendrian representatives of a knot type.
 *
 * A peak is a non-destabilizable class.  Stabilizing moves one step down the
 * lattice, tb -> tb - 1 and r -> r +- 1, so the classes below a peak P form
 * the parity-respecting cone  { (tb, r) : P.tb - tb >= |r - P.r|,
 * P.tb - tb = r - P.r (mod 2) }.  A mountain range is the union of the cones
 * of its peaks.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace legcalc::mountain {

/// A non-destabilizable Legendrian class.  tb + r is always odd here; every
/// knot type this library ships has that parity and the constructor enforces
/// it.
struct Peak {
    std::int64_t tb = 0;
    std::int64_t r = 0;

    friend bool operator==(const Peak&, const Peak&) = default;
    friend auto operator<=>(const Peak&, const Peak&) = default;
};

Peak make_peak(std::int64_t tb, std::int64_t r);

/// Whether (tb, r) lies in the closed stabilization cone below the peak.
bool in_cone(const Peak& peak, std::int64_t tb, std::int64_t r);

class MountainRange {
  public:
    /// Validates and canonicalizes a peak list: peaks are sorted, duplicates
    /// and dominated peaks (one inside another's cone) are rejected, and all
    /// peaks must share the parity of tb + r.  Throws std::invalid_argument.
    explicit MountainRange(std::vector<Peak> peaks);

    const std::vector<Peak>& peaks() const { return peaks_; }

    /// Largest tb over all peaks.
    std::int64_t max_tb() const;

    /// Peaks attaining max_tb(), in increasing r order.
    std::vector<Peak> max_tb_peaks() const;

    /// True when the peaks do not all share one tb value.  Such ranges are
    /// accepted but worth surfacing to callers that assume a flat top.
    bool has_mixed_peak_levels() const;

    friend bool operator==(const MountainRange&, const MountainRange&) = default;

  private:
    std::vector<Peak> peaks_;
};

/// Membership of (tb, r) in the range: inside some peak's cone.
bool contains(const MountainRange& mr, std::int64_t tb, std::int64_t r);

/// One stabilization: (tb, r) -> (tb - 1, r + 1) for positive sign,
/// (tb - 1, r - 1) for negative.
Peak stabilize(const Peak& klass, int sign);

/**
 * The mountain range of the (p, q)-torus knot, sign +1 or -1.
 *
 * Preconditions: gcd(p, q) = 1, q >= p >= 1, and q > p when p >= 2.
 * p = 1 gives the unknot range {(-1, 0)} for either sign.  Positive torus
 * knots have the single peak (pq - p - q, 0).  Negative (p, -q) torus knots
 * with p >= 2 have 2*floor(q/p) peaks, all at tb = -pq, with rotation
 * numbers +-(q - p - 2pk) for 0 <= k < floor(q/p).
 */
MountainRange torus_knot_range(std::int64_t p, std::int64_t q, int sign);

/**
 * Every class of the range with tb >= tb_floor, sorted by tb descending and
 * r ascending.  Returns an empty list when tb_floor exceeds every peak.
 */
std::vector<Peak> lattice_points_at_or_above(const MountainRange& mr, std::int64_t tb_floor);

/// Unknot classes at a fixed tb <= -1: rotation numbers tb+1, tb+3, ..., -tb-1.
/// Throws std::domain_error for tb >= 0.
std::vector<Peak> unknot_classes_at(std::int64_t tb);

/**
 * Reachability oracle: breadth-first closure of the peaks under single
 * stabilizations, stopping after `budget` levels.  Intended as a slow
 * cross-check of contains().  Throws std::invalid_argument when budget is
 * too small to decide, i.e. budget < max_tb() - tb.
 */
bool bfs_contains(const MountainRange& mr, std::int64_t tb, std::int64_t r,
                  std::int64_t budget);

}  // namespace legcalc::mountain
