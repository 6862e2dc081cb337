#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "legcalc/torus_links.hpp"

using namespace legcalc;
using namespace legcalc::links;
using mountain::Peak;

namespace {

/// Brute-force realizability: the full BFS stabilization closure of every
/// rep down to tb >= floor, computed once per spec and queried by lookup.
const std::set<LinkMultiset>& bfs_closure(const TorusLinkSpec& spec, std::int64_t floor) {
    static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, int, std::int64_t>,
                    std::set<LinkMultiset>>
        cache;
    auto key = std::make_tuple(spec.n, spec.p, spec.q, spec.sign, floor);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::set<LinkMultiset> seen;
    std::vector<LinkMultiset> frontier;
    for (const NondestabRep& rep : nondestabilizable_reps(spec)) {
        LinkMultiset start = rep.components;
        if (seen.insert(start).second) frontier.push_back(start);
    }
    while (!frontier.empty()) {
        std::vector<LinkMultiset> next;
        for (const LinkMultiset& link : frontier)
            for (std::size_t i = 0; i < link.size(); ++i)
                for (int sign : {+1, -1}) {
                    LinkMultiset stabbed = link;
                    stabbed[i] = mountain::stabilize(stabbed[i], sign);
                    if (stabbed[i].tb < floor) continue;
                    stabbed = make_multiset(stabbed);
                    if (seen.insert(stabbed).second) next.push_back(stabbed);
                }
        frontier.swap(next);
    }
    return cache.emplace(key, std::move(seen)).first->second;
}

bool bfs_realizable(const TorusLinkSpec& spec, const LinkMultiset& target) {
    std::int64_t floor = 0;
    for (const Peak& c : target) floor = std::min(floor, c.tb);
    return bfs_closure(spec, std::min(floor, std::int64_t{-12})).count(target) > 0;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW(make_spec(2, 3, 7, -1));
    CHECK_NOTHROW(make_spec(2, 1, 1, -1));
    CHECK_THROWS_AS(make_spec(1, 2, 3, +1), std::invalid_argument);   // n too small
    CHECK_THROWS_AS(make_spec(2, 2, 4, -1), std::invalid_argument);   // gcd
    CHECK_THROWS_AS(make_spec(2, 3, 2, +1), std::invalid_argument);   // q < p
    CHECK_THROWS_AS(make_spec(2, 2, 2, -1), std::invalid_argument);   // q = p >= 2
    CHECK_THROWS_AS(make_spec(2, 1, 2, 0), std::invalid_argument);    // sign
}

TEST_CASE("nondestabilizable reps: positive") {
    auto reps = nondestabilizable_reps(make_spec(2, 2, 3, +1));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].kind == RepKind::PosMax);
    CHECK(reps[0].components == LinkMultiset{{1, 0}, {1, 0}});
}

TEST_CASE("nondestabilizable reps: negative knotted") {
    auto reps = nondestabilizable_reps(make_spec(2, 3, 7, -1));
    REQUIRE(reps.size() == 4);
    std::vector<std::int64_t> r0s;
    for (const auto& rep : reps) {
        CHECK(rep.kind == RepKind::NegKnottedMax);
        CHECK(rep.components == LinkMultiset(2, Peak{-21, rep.r0}));
        r0s.push_back(rep.r0);
    }
    CHECK(r0s == std::vector<std::int64_t>{-4, -2, 2, 4});
}

TEST_CASE("nondestabilizable reps: negative unknotted components") {
    // (2,-6)-torus link = spec (2,1,3,-): 6 reps.
    auto reps = nondestabilizable_reps(make_spec(2, 1, 3, -1));
    CHECK(reps.size() == 6);

    // (3,-9): 6 reps, exactly 3 of kind NCopy.
    auto reps39 = nondestabilizable_reps(make_spec(3, 1, 3, -1));
    CHECK(reps39.size() == 6);
    std::int64_t ncopies = 0;
    for (const auto& rep : reps39)
        if (rep.kind == RepKind::NCopy) ++ncopies;
    CHECK(ncopies == 3);

    // Count law q(q+1)/2 for 2 <= q <= 8, any n.
    for (std::int64_t q = 2; q <= 8; ++q)
        for (std::int64_t n = 2; n <= 4; ++n)
            CHECK(nondestabilizable_reps(make_spec(n, 1, q, -1)).size() ==
                  static_cast<std::size_t>(q * (q + 1) / 2));

    // q = 1: the twist range is empty; only the single n-copy rep remains.
    auto repsq1 = nondestabilizable_reps(make_spec(3, 1, 1, -1));
    REQUIRE(repsq1.size() == 1);
    CHECK(repsq1[0].kind == RepKind::NCopy);
    CHECK(repsq1[0].components == LinkMultiset(3, Peak{-1, 0}));
}

TEST_CASE("twisted rep shape") {
    auto reps = nondestabilizable_reps(make_spec(3, 1, 3, -1));
    // Order: NCopy r0 ascending, then Twisted by (t, r0) ascending.
    REQUIRE(reps.size() == 6);
    CHECK(reps[0].kind == RepKind::NCopy);
    CHECK(reps[0].r0 == -2);
    CHECK(reps[2].r0 == 2);
    CHECK(reps[3].kind == RepKind::Twisted);
    CHECK(reps[3].t == 1);
    CHECK(reps[3].r0 == -1);
    CHECK(reps[3].components == LinkMultiset{{-4, -1}, {-4, -1}, {-2, -1}});
    CHECK(reps[5].t == 2);
    CHECK(reps[5].r0 == 0);
    CHECK(reps[5].components == LinkMultiset{{-5, 0}, {-5, 0}, {-1, 0}});
}

TEST_CASE("total tb and component sum bound") {
    CHECK(total_tb(make_spec(2, 1, 3, -1), {{-3, 0}, {-3, 0}}) == -12);
    CHECK(total_tb(make_spec(2, 2, 3, +1), {{1, 0}, {1, 0}}) == 14);
    CHECK(max_component_tb_sum(make_spec(2, 2, 3, +1)) == 2);
    CHECK(max_component_tb_sum(make_spec(3, 1, 2, -1)) == -6);
    CHECK(max_component_tb_sum(make_spec(3, 3, 7, -1)) == -63);
    // Epstein sanity: max total tb of (2,-6) is -12 = -n^2 pq.
    const TorusLinkSpec s = make_spec(2, 1, 3, -1);
    CHECK(total_tb(s, {{-3, 0}, {-3, 0}}) == -2 * 2 * 1 * 3);
}

TEST_CASE("realizability: knotted components") {
    const TorusLinkSpec s = make_spec(2, 3, 7, -1);
    CHECK_FALSE(is_realizable(s, {{-21, 4}, {-21, 2}}).realizable);
    CHECK(is_realizable(s, {{-21, 4}, {-21, 4}}).realizable);
    // Any two distinct peak rotations fail; equal ones succeed.
    const auto peaks = mountain::torus_knot_range(3, 7, -1).peaks();
    for (const Peak& a : peaks)
        for (const Peak& b : peaks)
            CHECK(is_realizable(s, {a, b}).realizable == (a == b));
    // One step below the ridge, adjacent peaks overlap.
    auto d = is_realizable(s, {{-22, 3}, {-22, 3}});
    REQUIRE(d.realizable);
    CHECK(d.witnesses.size() == 2);
    CHECK(d.witnesses[0].r0 == 2);
    CHECK(d.witnesses[1].r0 == 4);
}

TEST_CASE("realizability: unknotted components and the high/low trade-off") {
    const TorusLinkSpec s = make_spec(2, 1, 3, -1);
    auto d = is_realizable(s, {{-2, 1}, {-4, 1}});
    REQUIRE(d.realizable);
    REQUIRE(d.witnesses.size() == 1);
    CHECK(d.witnesses[0].kind == RepKind::Twisted);
    CHECK(d.witnesses[0].t == 1);
    CHECK(d.witnesses[0].r0 == 1);

    // Two components above -q at once is impossible; for n = 2 the tb sum
    // bound already catches it.
    auto bad = is_realizable(s, {{-2, 1}, {-2, 1}});
    CHECK_FALSE(bad.realizable);
    CHECK(bad.reason.find("exceeds") != std::string::npos);

    // With a third, low component the sum bound holds but the high/low
    // trade-off is violated.
    auto bad3 = is_realizable(make_spec(3, 1, 3, -1), {{-2, 1}, {-2, 1}, {-6, 1}});
    CHECK_FALSE(bad3.realizable);
    CHECK(bad3.reason.find("forces") != std::string::npos);

    // Non-max-tb yet non-destabilizable example.
    auto d3 = is_realizable(make_spec(3, 1, 3, -1), {{-2, 1}, {-4, 1}, {-4, 1}});
    CHECK(d3.realizable);
}

TEST_CASE("realizability matches the BFS stabilization oracle") {
    int checked = 0;
    for (const auto& spec :
         {make_spec(2, 1, 2, -1), make_spec(2, 1, 3, -1), make_spec(3, 1, 3, -1),
          make_spec(2, 2, 3, -1), make_spec(2, 2, 3, +1), make_spec(3, 1, 4, -1)}) {
        std::vector<Peak> window;
        const std::int64_t top =
            spec.sign > 0 ? spec.p * spec.q - spec.p - spec.q : -spec.p * spec.q + 2;
        for (std::int64_t tb = top; tb >= -12; --tb)
            for (std::int64_t r = -5; r <= 5; ++r) {
                if ((((tb + r) % 2) + 2) % 2 != 1) continue;
                window.push_back(Peak{tb, r});
            }
        // Sample pairs/triples from the window.
        for (std::size_t i = 0; i < window.size(); i += 3)
            for (std::size_t j = i; j < window.size(); j += 5) {
                LinkMultiset m{window[i], window[j]};
                if (spec.n == 3) m.push_back(window[(i + j) / 2]);
                m = make_multiset(m);
                CHECK(is_realizable(spec, m).realizable == bfs_realizable(spec, m));
                ++checked;
            }
    }
    CHECK(checked > 400);
}

TEST_CASE("cone closure: stabilizing any component of a realizable link") {
    const TorusLinkSpec s = make_spec(2, 1, 3, -1);
    for (const NondestabRep& rep : nondestabilizable_reps(s)) {
        for (std::size_t i = 0; i < rep.components.size(); ++i)
            for (int sg : {+1, -1}) {
                LinkMultiset m = rep.components;
                m[i] = mountain::stabilize(m[i], sg);
                CHECK(is_realizable(s, make_multiset(m)).realizable);
            }
    }
}

TEST_CASE("unordered isotopy") {
    const TorusLinkSpec s = make_spec(2, 3, 7, -1);
    CHECK(unordered_isotopic(s, {{-21, 4}, {-21, 4}}, {{-21, 4}, {-21, 4}}));
    CHECK_FALSE(unordered_isotopic(s, {{-21, 4}, {-21, 4}}, {{-21, 2}, {-21, 2}}));
    CHECK_THROWS_WITH_AS(
        unordered_isotopic(s, {{-21, 4}, {-21, 2}}, {{-21, 4}, {-21, 4}}),
        doctest::Contains("first"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        unordered_isotopic(s, {{-21, 4}, {-21, 4}}, {{-21, 4}, {-21, 2}}),
        doctest::Contains("second"), std::invalid_argument);
}

TEST_CASE("common destabilizations") {
    // One negative stabilization of (-21,4) or one positive of (-21,2).
    auto w = common_destabilizations(make_spec(2, 3, 7, -1), {{-22, 3}, {-22, 3}});
    REQUIRE(w.size() == 2);
    CHECK(w[0].r0 == 2);
    CHECK(w[1].r0 == 4);

    auto w2 = common_destabilizations(make_spec(3, 1, 2, -1), {{-2, -1}, {-2, -1}, {-2, -1}});
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].kind == RepKind::NCopy);
    CHECK(w2[0].r0 == -1);

    // {(-3,0)x3} sits below both n-copies and the 1-twisted rep, whose high
    // slot (-1,0) admits (-3,0) after two stabilizations.
    auto w3 = common_destabilizations(make_spec(3, 1, 2, -1), {{-3, 0}, {-3, 0}, {-3, 0}});
    REQUIRE(w3.size() == 3);
    CHECK(w3[0].kind == RepKind::NCopy);
    CHECK(w3[0].r0 == -1);
    CHECK(w3[1].kind == RepKind::NCopy);
    CHECK(w3[1].r0 == 1);
    CHECK(w3[2].kind == RepKind::Twisted);
    CHECK(w3[2].t == 1);

    CHECK_THROWS_AS(common_destabilizations(make_spec(2, 3, 7, -1), {{-21, 4}, {-21, 2}}),
                    std::invalid_argument);
}

TEST_CASE("ordered link label validation") {
    const TorusLinkSpec s = make_spec(3, 1, 2, -1);
    CHECK_NOTHROW(make_ordered_link(s, {{-2, -1}, {-2, -1}, {-2, -1}}, {0, 1, 2}));
    CHECK_NOTHROW(make_ordered_link(s, {{-2, -1}, {-3, 0}, {-2, -1}}, {1, -1, 0}));
    // Missing label on a level component.
    CHECK_THROWS_AS(make_ordered_link(s, {{-2, -1}, {-2, -1}, {-2, -1}}, {0, 1, -1}),
                    std::invalid_argument);
    // Label on a non-level component.
    CHECK_THROWS_AS(make_ordered_link(s, {{-3, 0}, {-3, 0}, {-3, 0}}, {0, 1, 2}),
                    std::invalid_argument);
    // Not a permutation.
    CHECK_THROWS_AS(make_ordered_link(s, {{-2, -1}, {-2, -1}, {-2, -1}}, {0, 0, 1}),
                    std::invalid_argument);
    // Positive links carry no labels.
    CHECK_THROWS_AS(
        make_ordered_link(make_spec(2, 2, 3, +1), {{1, 0}, {1, 0}}, {0, 1}),
        std::invalid_argument);
    CHECK_NOTHROW(make_ordered_link(make_spec(2, 2, 3, +1), {{1, 0}, {1, 0}}, {-1, -1}));
}

TEST_CASE("permutations: negative all-max links admit exactly the rotations") {
    for (std::int64_t n : {3LL, 4LL, 5LL}) {
        const TorusLinkSpec s = make_spec(n, 3, 7, -1);
        std::vector<Peak> comps(static_cast<std::size_t>(n), Peak{-21, 4});
        std::vector<std::int64_t> labels(comps.size());
        std::iota(labels.begin(), labels.end(), 0);
        OrderedLink link = make_ordered_link(s, comps, labels);
        CHECK(realizable_permutation_count(s, link) == n);

        // Rotations pass, a transposition fails for n >= 3.
        std::vector<std::int64_t> rot(comps.size());
        for (std::size_t i = 0; i < rot.size(); ++i)
            rot[i] = static_cast<std::int64_t>((i + 1) % rot.size());
        CHECK(permutation_realizable(s, link, rot));
        std::vector<std::int64_t> swap01(comps.size());
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        CHECK_FALSE(permutation_realizable(s, link, swap01));
    }
}

TEST_CASE("permutations: positive links allow any invariant-preserving map") {
    const TorusLinkSpec s = make_spec(3, 2, 3, +1);
    OrderedLink link = make_ordered_link(s, {{1, 0}, {1, 0}, {1, 0}}, {-1, -1, -1});
    CHECK(realizable_permutation_count(s, link) == 6);

    OrderedLink mixed = make_ordered_link(s, {{1, 0}, {0, 1}, {0, 1}}, {-1, -1, -1});
    CHECK(realizable_permutation_count(s, mixed) == 2);
    CHECK(permutation_realizable(s, mixed, {0, 2, 1}));
    CHECK_FALSE(permutation_realizable(s, mixed, {1, 0, 2}));
}

TEST_CASE("permutations: mixed negative links") {
    // One component on the -pq level keeps its place; equal lower components
    // may swap.
    const TorusLinkSpec s = make_spec(3, 1, 3, -1);
    OrderedLink link = make_ordered_link(s, {{-2, 1}, {-4, 1}, {-4, 1}}, {-1, -1, -1});
    CHECK(realizable_permutation_count(s, link) == 2);

    OrderedLink with_level = make_ordered_link(s, {{-3, 0}, {-4, 1}, {-4, 1}}, {0, -1, -1});
    CHECK(permutation_realizable(s, with_level, {0, 2, 1}));
    CHECK(realizable_permutation_count(s, with_level) == 2);

    // Identity-only example: distinct lower invariants.
    OrderedLink rigid = make_ordered_link(s, {{-3, 0}, {-4, 1}, {-4, -1}}, {0, -1, -1});
    CHECK(realizable_permutation_count(s, rigid) == 1);

    CHECK_THROWS_AS(permutation_realizable(s, link, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_realizable(s, link, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("permutation group structure") {
    const TorusLinkSpec s = make_spec(4, 1, 2, -1);
    OrderedLink link = make_ordered_link(s, {{-2, 1}, {-2, 1}, {-2, 1}, {-2, 1}}, {0, 1, 2, 3});
    std::vector<std::vector<std::int64_t>> good;
    std::vector<std::int64_t> sigma{0, 1, 2, 3};
    do {
        if (permutation_realizable(s, link, sigma)) good.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    REQUIRE(good.size() == 4);
    // Closed under composition.
    for (const auto& a : good)
        for (const auto& b : good) {
            std::vector<std::int64_t> ab(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                ab[i] = a[static_cast<std::size_t>(b[i])];
            CHECK(permutation_realizable(s, link, ab));
        }
}

TEST_CASE("transverse invariants") {
    CHECK(transverse_sl_max_component(2, 3, +1) == 1);
    CHECK(transverse_sl_max_component(3, 7, -1) == -17);
    CHECK(transverse_sl_max_component(1, 5, -1) == -1);
    CHECK(transverse_sl_max_component(1, 5, +1) == -1);

    // sl_max equals max(tb - r) over the mountain range.
    for (std::int64_t p = 1; p <= 4; ++p)
        for (std::int64_t q = p; q <= 9; ++q) {
            if (std::gcd(p, q) != 1 || (p >= 2 && q == p)) continue;
            for (int sign : {+1, -1}) {
                std::int64_t best = INT64_MIN;
                const mountain::MountainRange range = mountain::torus_knot_range(p, q, sign);
                for (const Peak& c : range.peaks()) best = std::max(best, c.tb - c.r);
                CHECK(transverse_sl_max_component(p, q, sign) == best);
            }
        }
}

TEST_CASE("transverse realizability") {
    CHECK(transverse_realizable(make_spec(2, 2, 3, +1), {1, 1}));
    CHECK_FALSE(transverse_realizable(make_spec(2, 2, 3, +1), {1, 3}));
    CHECK(transverse_realizable(make_spec(2, 3, 7, -1), {-17, -19}));
    CHECK_FALSE(transverse_realizable(make_spec(2, 3, 7, -1), {-15, -19}));
    CHECK_THROWS_AS(transverse_realizable(make_spec(2, 2, 3, +1), {1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(transverse_realizable(make_spec(2, 2, 3, +1), {1}),
                    std::invalid_argument);

    // Legendrian realizability implies transverse realizability of tb - r.
    for (const auto& spec : {make_spec(2, 1, 3, -1), make_spec(2, 3, 7, -1)}) {
        for (const NondestabRep& rep : nondestabilizable_reps(spec)) {
            std::vector<std::int64_t> sls;
            for (const Peak& c : rep.components) sls.push_back(c.tb - c.r);
            CHECK(transverse_realizable(spec, sls));
        }
    }
}
