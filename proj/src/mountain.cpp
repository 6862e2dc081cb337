#include "legcalc/mountain.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace legcalc::mountain {

namespace {

bool odd(std::int64_t v) { return ((v % 2) + 2) % 2 == 1; }

}  // namespace

Peak make_peak(std::int64_t tb, std::int64_t r) {
    if (!odd(tb + r)) {
        throw std::invalid_argument("peak (" + std::to_string(tb) + ", " + std::to_string(r) +
                                    "): tb + r must be odd");
    }
    return Peak{tb, r};
}

bool in_cone(const Peak& peak, std::int64_t tb, std::int64_t r) {
    const std::int64_t drop = peak.tb - tb;
    if (drop < 0) return false;
    if (std::abs(r - peak.r) > drop) return false;
    return (drop - (r - peak.r)) % 2 == 0;
}

MountainRange::MountainRange(std::vector<Peak> peaks) : peaks_(std::move(peaks)) {
    if (peaks_.empty()) throw std::invalid_argument("mountain range needs at least one peak");
    std::sort(peaks_.begin(), peaks_.end());
    for (const Peak& p : peaks_) {
        if (!odd(p.tb + p.r)) {
            throw std::invalid_argument("peak (" + std::to_string(p.tb) + ", " +
                                        std::to_string(p.r) + "): tb + r must be odd");
        }
    }
    for (std::size_t i = 0; i < peaks_.size(); ++i) {
        for (std::size_t j = 0; j < peaks_.size(); ++j) {
            if (i == j) continue;
            if (in_cone(peaks_[i], peaks_[j].tb, peaks_[j].r)) {
                throw std::invalid_argument(
                    "peak (" + std::to_string(peaks_[j].tb) + ", " + std::to_string(peaks_[j].r) +
                    ") is dominated by (" + std::to_string(peaks_[i].tb) + ", " +
                    std::to_string(peaks_[i].r) + ")");
            }
        }
    }
}

std::int64_t MountainRange::max_tb() const {
    std::int64_t best = peaks_.front().tb;
    for (const Peak& p : peaks_) best = std::max(best, p.tb);
    return best;
}

std::vector<Peak> MountainRange::max_tb_peaks() const {
    const std::int64_t top = max_tb();
    std::vector<Peak> out;
    for (const Peak& p : peaks_)
        if (p.tb == top) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](const Peak& a, const Peak& b) { return a.r < b.r; });
    return out;
}

bool MountainRange::has_mixed_peak_levels() const {
    for (const Peak& p : peaks_)
        if (p.tb != peaks_.front().tb) return true;
    return false;
}

bool contains(const MountainRange& mr, std::int64_t tb, std::int64_t r) {
    for (const Peak& p : mr.peaks())
        if (in_cone(p, tb, r)) return true;
    return false;
}

Peak stabilize(const Peak& klass, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
    return Peak{klass.tb - 1, klass.r + sign};
}

MountainRange torus_knot_range(std::int64_t p, std::int64_t q, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("torus knot sign must be +-1");
    if (p < 1 || q < p) throw std::invalid_argument("torus knot needs q >= p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot needs gcd(p, q) = 1");
    if (p >= 2 && q == p) throw std::invalid_argument("torus knot needs q > p when p >= 2");

    if (p == 1) return MountainRange({Peak{-1, 0}});
    if (sign > 0) return MountainRange({Peak{p * q - p - q, 0}});

    const std::int64_t m = q / p;
    std::vector<Peak> peaks;
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t r = q - p - 2 * p * k;
        peaks.push_back(Peak{-p * q, r});
        peaks.push_back(Peak{-p * q, -r});
    }
    std::sort(peaks.begin(), peaks.end());
    peaks.erase(std::unique(peaks.begin(), peaks.end()), peaks.end());
    return MountainRange(std::move(peaks));
}

std::vector<Peak> lattice_points_at_or_above(const MountainRange& mr, std::int64_t tb_floor) {
    std::set<Peak> seen;
    for (std::int64_t tb = mr.max_tb(); tb >= tb_floor; --tb)
        for (const Peak& p : mr.peaks()) {
            if (p.tb < tb) continue;
            for (std::int64_t r = p.r - (p.tb - tb); r <= p.r + (p.tb - tb); r += 2)
                seen.insert(Peak{tb, r});
        }
    std::vector<Peak> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) {
        if (a.tb != b.tb) return a.tb > b.tb;
        return a.r < b.r;
    });
    return out;
}

std::vector<Peak> unknot_classes_at(std::int64_t tb) {
    if (tb >= 0) throw std::domain_error("unknot classes exist only for tb <= -1");
    std::vector<Peak> out;
    for (std::int64_t r = tb + 1; r <= -tb - 1; r += 2) out.push_back(Peak{tb, r});
    return out;
}

bool bfs_contains(const MountainRange& mr, std::int64_t tb, std::int64_t r,
                  std::int64_t budget) {
    if (budget < mr.max_tb() - tb) {
        throw std::invalid_argument("bfs budget too small to decide membership");
    }
    std::set<Peak> frontier(mr.peaks().begin(), mr.peaks().end());
    for (std::int64_t step = 0; step <= budget; ++step) {
        for (const Peak& p : frontier)
            if (p.tb == tb && p.r == r) return true;
        std::set<Peak> next;
        for (const Peak& p : frontier) {
            if (p.tb - 1 < tb) continue;
            next.insert(Peak{p.tb - 1, p.r + 1});
            next.insert(Peak{p.tb - 1, p.r - 1});
        }
        if (next.empty()) break;
        frontier.swap(next);
    }
    return false;
}

}  // namespace legcalc::mountain
