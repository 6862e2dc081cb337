#include "legcalc/fronts.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legcalc::fronts {

namespace {

/// Union-find with parity: tracks whether two strand tokens point the same
/// way (even) or opposite ways (odd) along the curve.
class ParityDsu {
  public:
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        parity_.push_back(0);
        return static_cast<int>(parent_.size()) - 1;
    }

    std::pair<int, int> find(int x) {  // (root, parity to root)
        int p = 0;
        int root = x;
        while (parent_[root] != root) {
            p ^= parity_[root];
            root = parent_[root];
        }
        // Path compression.
        int walk = x;
        int walk_p = p;
        while (parent_[walk] != root) {
            const int next = parent_[walk];
            const int next_p = walk_p ^ parity_[walk];
            parent_[walk] = root;
            parity_[walk] = walk_p;
            walk = next;
            walk_p = next_p;
        }
        return {root, p};
    }

    void unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return;  // consistency is structural, see analyze()
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ parity;
    }

  private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

std::string event_str(const Event& e, std::size_t index) {
    const char* name = e.type == EventType::LeftCusp     ? "left cusp"
                       : e.type == EventType::RightCusp ? "right cusp"
                                                        : "crossing";
    return std::string(name) + " at position " + std::to_string(e.pos) + " (event " +
           std::to_string(index) + ")";
}

/// Bubble-sorts `ranks` with adjacent swaps, emitting a crossing at
/// base + i for every swap of rows i, i+1.  Deterministic; each inverted
/// pair crosses exactly once.
void emit_sort(std::vector<Event>& out, int base, std::vector<int> ranks) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
            if (ranks[i] > ranks[i + 1]) {
                std::swap(ranks[i], ranks[i + 1]);
                out.push_back({EventType::Crossing, base + static_cast<int>(i)});
                moved = true;
            }
        }
    }
}

struct NCopyResult {
    FrontWord word;
    int site_event = 0;  // insertion point right after the first cusp block
    int site_lo = 0;     // lowest row of the first cusp's upper bundle
};

NCopyResult n_copy_impl(const FrontWord& f, std::int64_t n_in) {
    if (n_in < 1) throw std::invalid_argument("n_copy needs n >= 1");
    if (component_count(f) != 1) throw std::invalid_argument("n_copy needs a single component");
    const int n = static_cast<int>(n_in);

    NCopyResult res;
    std::vector<Event>& out = res.word.events;
    for (std::size_t idx = 0; idx < f.events.size(); ++idx) {
        const Event& e = f.events[idx];
        const int m = n * e.pos;
        switch (e.type) {
            case EventType::LeftCusp: {
                // n stacked cusps (first-created pair ends on top = copy 0),
                // then a riffle so each bundle reads copy n-1 .. copy 0
                // bottom to top.
                for (int c = 0; c < n; ++c) out.push_back({EventType::LeftCusp, m});
                std::vector<int> ranks;
                for (int j = 0; j < n; ++j) {
                    ranks.push_back(j);      // lower branch of pair n-1-j
                    ranks.push_back(n + j);  // upper branch
                }
                emit_sort(out, m, std::move(ranks));
                break;
            }
            case EventType::Crossing: {
                // Swap two bundles wholesale, preserving bundle order.
                std::vector<int> ranks;
                for (int j = 0; j < n; ++j) ranks.push_back(n + j);
                for (int j = 0; j < n; ++j) ranks.push_back(j);
                emit_sort(out, m, std::move(ranks));
                break;
            }
            case EventType::RightCusp: {
                // Inverse riffle back to stacked pairs, then n closures.
                std::vector<int> ranks;
                for (int j = 0; j < n; ++j) ranks.push_back(2 * j);
                for (int j = 0; j < n; ++j) ranks.push_back(2 * j + 1);
                emit_sort(out, m, std::move(ranks));
                for (int c = 0; c < n; ++c) out.push_back({EventType::RightCusp, m});
                break;
            }
        }
        if (idx == 0) {
            res.site_event = static_cast<int>(out.size());
            res.site_lo = n;  // upper bundle of the first left cusp
        }
    }
    return res;
}

/// Width of the strand stack just before event index `at_event`.
int width_at(const FrontWord& f, int at_event) {
    if (at_event < 0 || at_event > static_cast<int>(f.events.size()))
        throw std::invalid_argument("event index out of range");
    int w = 0;
    for (int i = 0; i < at_event; ++i) {
        switch (f.events[static_cast<std::size_t>(i)].type) {
            case EventType::LeftCusp: w += 2; break;
            case EventType::RightCusp: w -= 2; break;
            case EventType::Crossing: break;
        }
    }
    return w;
}

FrontWord splice(const FrontWord& f, int at_event, const std::vector<Event>& tangle) {
    FrontWord out;
    out.events.reserve(f.events.size() + tangle.size());
    out.events.insert(out.events.end(), f.events.begin(), f.events.begin() + at_event);
    out.events.insert(out.events.end(), tangle.begin(), tangle.end());
    out.events.insert(out.events.end(), f.events.begin() + at_event, f.events.end());
    return out;
}

/// One excursion of the strand at row s around the rows (s, top] of the
/// block [lo, top]: out above them and back, net permutation the identity.
void emit_excursion(std::vector<Event>& out, int lo, int n, int s) {
    const int top = lo + n - 1;
    out.push_back({EventType::LeftCusp, top + 1});
    for (int j = top; j >= s + 1; --j) out.push_back({EventType::Crossing, j});
    out.push_back({EventType::RightCusp, s});
    out.push_back({EventType::LeftCusp, s});
    for (int j = s + 1; j <= top; ++j) out.push_back({EventType::Crossing, j});
    out.push_back({EventType::RightCusp, top + 1});
}

}  // namespace

FrontAnalysis analyze(const FrontWord& f) {
    ParityDsu dsu;
    std::vector<int> stack;                    // token per live row
    std::vector<int> partner;                  // other live end of the token's arc
    std::vector<std::pair<int, int>> involved;  // the two tokens of each event
    std::vector<bool> closed_token;

    for (std::size_t idx = 0; idx < f.events.size(); ++idx) {
        const Event& e = f.events[idx];
        const int size = static_cast<int>(stack.size());
        switch (e.type) {
            case EventType::LeftCusp: {
                if (e.pos < 0 || e.pos > size)
                    throw std::invalid_argument("bad " + event_str(e, idx));
                const int a = dsu.add();  // lower branch
                const int b = dsu.add();  // upper branch
                partner.resize(static_cast<std::size_t>(b) + 1, -1);
                closed_token.resize(static_cast<std::size_t>(b) + 1, false);
                partner[static_cast<std::size_t>(a)] = b;
                partner[static_cast<std::size_t>(b)] = a;
                dsu.unite(a, b, 1);
                stack.insert(stack.begin() + e.pos, {a, b});
                involved.emplace_back(a, b);
                break;
            }
            case EventType::Crossing: {
                if (e.pos < 0 || e.pos + 1 >= size)
                    throw std::invalid_argument("bad " + event_str(e, idx));
                const int t1 = stack[static_cast<std::size_t>(e.pos)];
                const int t2 = stack[static_cast<std::size_t>(e.pos) + 1];
                involved.emplace_back(t1, t2);
                std::swap(stack[static_cast<std::size_t>(e.pos)],
                          stack[static_cast<std::size_t>(e.pos) + 1]);
                break;
            }
            case EventType::RightCusp: {
                if (e.pos < 0 || e.pos + 1 >= size)
                    throw std::invalid_argument("bad " + event_str(e, idx));
                const int u = stack[static_cast<std::size_t>(e.pos)];
                const int v = stack[static_cast<std::size_t>(e.pos) + 1];
                involved.emplace_back(u, v);
                dsu.unite(u, v, 1);
                if (partner[static_cast<std::size_t>(u)] == v) {
                    // Arc closes into a component.
                } else {
                    const int pu = partner[static_cast<std::size_t>(u)];
                    const int pv = partner[static_cast<std::size_t>(v)];
                    partner[static_cast<std::size_t>(pu)] = pv;
                    partner[static_cast<std::size_t>(pv)] = pu;
                }
                closed_token[static_cast<std::size_t>(u)] = true;
                closed_token[static_cast<std::size_t>(v)] = true;
                stack.erase(stack.begin() + e.pos, stack.begin() + e.pos + 2);
                break;
            }
        }
    }
    if (!stack.empty())
        throw std::invalid_argument("front does not close up: " +
                                    std::to_string(stack.size()) + " strands left open");

    // Components in order of their first left cusp; remember each one's seed
    // token (the upper branch of that cusp, oriented rightward).
    std::map<int, int> root_to_comp;
    std::vector<int> seed_parity;
    std::vector<int> comp_of_event(f.events.size(), -1);
    FrontAnalysis res;
    for (std::size_t idx = 0; idx < f.events.size(); ++idx) {
        if (f.events[idx].type != EventType::LeftCusp) continue;
        const int b = involved[idx].second;
        auto [root, parity] = dsu.find(b);
        if (root_to_comp.find(root) == root_to_comp.end()) {
            root_to_comp[root] = static_cast<int>(seed_parity.size());
            seed_parity.push_back(parity);
        }
    }
    const int ncomp = static_cast<int>(seed_parity.size());
    res.component_count_ = ncomp;
    res.tb_.assign(static_cast<std::size_t>(ncomp), 0);
    res.r_.assign(static_cast<std::size_t>(ncomp), 0);
    res.lk_.assign(static_cast<std::size_t>(ncomp),
                   std::vector<std::int64_t>(static_cast<std::size_t>(ncomp), 0));
    res.crossing_components_.assign(f.events.size(), {-1, -1});

    // dir = +1 for rightward.  dir(token) = +1 iff parity(token) equals the
    // seed parity of its component.
    auto comp_dir = [&](int token) {
        auto [root, parity] = dsu.find(token);
        const int c = root_to_comp.at(root);
        return std::pair<int, int>(c, parity == seed_parity[static_cast<std::size_t>(c)] ? 1 : -1);
    };

    std::vector<std::int64_t> writhe(static_cast<std::size_t>(ncomp), 0);
    std::vector<std::int64_t> rights(static_cast<std::size_t>(ncomp), 0);
    std::vector<std::int64_t> ups(static_cast<std::size_t>(ncomp), 0);
    std::vector<std::int64_t> downs(static_cast<std::size_t>(ncomp), 0);

    for (std::size_t idx = 0; idx < f.events.size(); ++idx) {
        const Event& e = f.events[idx];
        const auto [t1, t2] = involved[idx];
        switch (e.type) {
            case EventType::LeftCusp: {
                const auto [c, dir_b] = comp_dir(t2);
                comp_of_event[idx] = c;
                (dir_b == 1 ? ups : downs)[static_cast<std::size_t>(c)] += 1;
                break;
            }
            case EventType::RightCusp: {
                const auto [c, dir_u] = comp_dir(t1);
                comp_of_event[idx] = c;
                rights[static_cast<std::size_t>(c)] += 1;
                (dir_u == 1 ? ups : downs)[static_cast<std::size_t>(c)] += 1;
                break;
            }
            case EventType::Crossing: {
                const auto [c1, d1] = comp_dir(t1);
                const auto [c2, d2] = comp_dir(t2);
                comp_of_event[idx] = c1;
                res.crossing_components_[idx] = {c1, c2};
                const std::int64_t sign = d1 * d2;
                if (c1 == c2) {
                    writhe[static_cast<std::size_t>(c1)] += sign;
                } else {
                    res.lk_[static_cast<std::size_t>(c1)][static_cast<std::size_t>(c2)] += sign;
                    res.lk_[static_cast<std::size_t>(c2)][static_cast<std::size_t>(c1)] += sign;
                }
                break;
            }
        }
    }
    for (int c = 0; c < ncomp; ++c) {
        res.tb_[static_cast<std::size_t>(c)] =
            writhe[static_cast<std::size_t>(c)] - rights[static_cast<std::size_t>(c)];
        res.r_[static_cast<std::size_t>(c)] =
            (downs[static_cast<std::size_t>(c)] - ups[static_cast<std::size_t>(c)]) / 2;
        for (int d = 0; d < ncomp; ++d) res.lk_[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] /= 2;
    }
    res.event_component_ = std::move(comp_of_event);
    return res;
}

std::int64_t FrontAnalysis::tb(int component) const {
    if (component < 0 || component >= component_count_)
        throw std::invalid_argument("component index out of range");
    return tb_[static_cast<std::size_t>(component)];
}

std::int64_t FrontAnalysis::r(int component) const {
    if (component < 0 || component >= component_count_)
        throw std::invalid_argument("component index out of range");
    return r_[static_cast<std::size_t>(component)];
}

std::int64_t FrontAnalysis::linking(int c1, int c2) const {
    if (c1 < 0 || c1 >= component_count_ || c2 < 0 || c2 >= component_count_)
        throw std::invalid_argument("component index out of range");
    if (c1 == c2) throw std::invalid_argument("linking needs two distinct components");
    return lk_[static_cast<std::size_t>(c1)][static_cast<std::size_t>(c2)];
}

std::int64_t tb_of_component(const FrontWord& f, int component) {
    return analyze(f).tb(component);
}

std::int64_t r_of_component(const FrontWord& f, int component) {
    return analyze(f).r(component);
}

std::int64_t linking(const FrontWord& f, int c1, int c2) { return analyze(f).linking(c1, c2); }

int component_count(const FrontWord& f) { return analyze(f).component_count(); }

FrontWord unknot_front() {
    return FrontWord{{{EventType::LeftCusp, 0}, {EventType::RightCusp, 0}}};
}

FrontWord fig8_front() {
    // Plat presentation: three nested cusps opening a 6-strand band, two
    // double-twist regions, three closures.  (tb, r) = (-3, 0); the knot type
    // is certified in the test suite by its Jones polynomial.
    using E = EventType;
    return FrontWord{{{E::LeftCusp, 0},
                      {E::LeftCusp, 1},
                      {E::LeftCusp, 2},
                      {E::Crossing, 1},
                      {E::Crossing, 0},
                      {E::Crossing, 1},
                      {E::Crossing, 0},
                      {E::Crossing, 2},
                      {E::Crossing, 1},
                      {E::Crossing, 2},
                      {E::Crossing, 1},
                      {E::RightCusp, 0},
                      {E::RightCusp, 1},
                      {E::RightCusp, 0}}};
}

FrontWord stabilize(const FrontWord& f, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
    if (component_count(f) != 1)
        throw std::invalid_argument("stabilize needs a single component");
    // Zigzag on the upper strand of the first cusp: a dip below it for the
    // positive variant (two down cusps), a bump above for the negative.
    std::vector<Event> zig;
    if (sign == 1) {
        zig = {{EventType::LeftCusp, 1}, {EventType::RightCusp, 2}};
    } else {
        zig = {{EventType::LeftCusp, 2}, {EventType::RightCusp, 1}};
    }
    return splice(f, 1, zig);
}

FrontWord stabilized_unknot_front(std::int64_t tb, std::int64_t r) {
    if (tb > -1) throw std::invalid_argument("unknot classes need tb <= -1");
    const std::int64_t plus = (-1 - tb + r) / 2;
    const std::int64_t minus = (-1 - tb - r) / 2;
    if (plus < 0 || minus < 0 || plus + minus != -1 - tb || (tb + r) % 2 == 0)
        throw std::invalid_argument("(" + std::to_string(tb) + ", " + std::to_string(r) +
                                    ") is not an unknot class");
    FrontWord f = unknot_front();
    for (std::int64_t i = 0; i < plus; ++i) f = stabilize(f, +1);
    for (std::int64_t i = 0; i < minus; ++i) f = stabilize(f, -1);
    return f;
}

FrontWord n_copy(const FrontWord& f, std::int64_t n) { return n_copy_impl(f, n).word; }

FrontWord insert_positive_twists(const FrontWord& f, int at_event, int lo, int k,
                                 std::int64_t count) {
    if (k < 1 || lo < 0) throw std::invalid_argument("bad tangle block");
    if (count < 0) throw std::invalid_argument("tangle count must be nonnegative");
    if (lo + k > width_at(f, at_event))
        throw std::invalid_argument("insertion site does not span " + std::to_string(k) +
                                    " parallel strands at row " + std::to_string(lo));
    std::vector<Event> tangle;
    for (std::int64_t rep = 0; rep < count; ++rep)
        for (int j = lo + k - 2; j >= lo; --j) tangle.push_back({EventType::Crossing, j});
    return splice(f, at_event, tangle);
}

FrontWord insert_sz_tangles(const FrontWord& f, int at_event, int lo, int p, TangleKind kind,
                            std::int64_t count) {
    if (p < 1 || lo < 0) throw std::invalid_argument("bad tangle block");
    if (count < 0 || count >= p)
        throw std::invalid_argument("tangle count must satisfy 0 <= count < p");
    if (lo + p > width_at(f, at_event))
        throw std::invalid_argument("insertion site does not span " + std::to_string(p) +
                                    " parallel strands at row " + std::to_string(lo));
    std::vector<Event> tangle;
    for (std::int64_t rep = 0; rep < count; ++rep) {
        if (kind == TangleKind::Z) {
            // A cusp opens below the block; its upper branch climbs through
            // all but the top strand, which it then absorbs.
            tangle.push_back({EventType::LeftCusp, lo});
            for (int j = lo + 1; j <= lo + p - 1; ++j)
                tangle.push_back({EventType::Crossing, j});
            tangle.push_back({EventType::RightCusp, lo + p});
        } else {
            // Mirror: a cusp opens above, its lower branch descends, and the
            // bottom strand is rerouted over the top.
            tangle.push_back({EventType::LeftCusp, lo + p});
            for (int j = lo + p - 1; j >= lo + 1; --j)
                tangle.push_back({EventType::Crossing, j});
            tangle.push_back({EventType::RightCusp, lo});
        }
    }
    return splice(f, at_event, tangle);
}

FrontWord twisted_n_copy(const FrontWord& f, std::int64_t n, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("twisted n-copy needs t >= 1");
    if (n < 2) throw std::invalid_argument("twisted n-copy needs n >= 2");
    NCopyResult base = n_copy_impl(f, n);
    std::vector<Event> tangle;
    const int ni = static_cast<int>(n);
    for (std::int64_t rep = 0; rep < t; ++rep)
        for (int s = base.site_lo; s <= base.site_lo + ni - 2; ++s)
            emit_excursion(tangle, base.site_lo, ni, s);
    return splice(base.word, base.site_event, tangle);
}

FrontWord standard_cable_front(const FrontWord& f, const cables::CableSpec& spec,
                               std::int64_t tb_bar, TangleKind kind) {
    const FrontAnalysis base = analyze(f);
    if (base.component_count() != 1)
        throw std::invalid_argument("cable construction needs a single-component base front");
    const std::int64_t tb = base.tb(0);

    if (spec.q > tb_bar * spec.p) {
        if (tb != tb_bar)
            throw std::invalid_argument("base front must have tb = " + std::to_string(tb_bar) +
                                        ", got " + std::to_string(tb));
        const std::int64_t s = spec.q - spec.p * tb_bar;
        NCopyResult base_copy = n_copy_impl(f, spec.n * spec.p);
        const int np = static_cast<int>(spec.n * spec.p);
        return insert_positive_twists(base_copy.word, base_copy.site_event, np, np,
                                      spec.n * s);
    }
    if (spec.q == tb_bar * spec.p) {
        if (tb != tb_bar)
            throw std::invalid_argument("base front must have tb = " + std::to_string(tb_bar) +
                                        ", got " + std::to_string(tb));
        return n_copy(f, spec.n);
    }
    if (spec.p == 1) {
        if (tb != spec.q)
            throw std::invalid_argument("base front must have tb = " + std::to_string(spec.q) +
                                        ", got " + std::to_string(tb));
        return n_copy(f, spec.n);
    }
    const std::int64_t level = cables::ceil_div(spec.q, spec.p);
    if (tb != level)
        throw std::invalid_argument("base front must have tb = " + std::to_string(level) +
                                    ", got " + std::to_string(tb));
    const std::int64_t s = spec.p * level - spec.q;
    NCopyResult pcopy = n_copy_impl(f, spec.p);
    FrontWord knot = insert_sz_tangles(pcopy.word, pcopy.site_event,
                                       static_cast<int>(spec.p), static_cast<int>(spec.p),
                                       kind, s);
    return n_copy(knot, spec.n);
}

FrontWord torus_link_front(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (n < 1 || p < 1 || q < p || std::gcd(p, q) != 1)
        throw std::invalid_argument("positive torus link front needs q >= p >= 1 coprime, n >= 1");
    const int np = static_cast<int>(n * p);
    FrontWord f;
    for (int j = 0; j < np; ++j) f.events.push_back({EventType::LeftCusp, j});
    FrontWord with_twists =
        insert_positive_twists(f, np, np, np, n * q);
    for (int j = np - 1; j >= 0; --j)
        with_twists.events.push_back({EventType::RightCusp, j});
    return with_twists;
}

std::string render(const FrontWord& f, RenderFormat format) {
    analyze(f);  // validate first
    if (format == RenderFormat::Ascii) {
        int width = 0, maxw = 0;
        std::vector<int> widths;  // strand count before each event
        for (const Event& e : f.events) {
            widths.push_back(width);
            if (e.type == EventType::LeftCusp) width += 2;
            if (e.type == EventType::RightCusp) width -= 2;
            maxw = std::max(maxw, width);
        }
        std::vector<std::string> grid(static_cast<std::size_t>(maxw),
                                      std::string(f.events.size(), ' '));
        for (std::size_t col = 0; col < f.events.size(); ++col) {
            const Event& e = f.events[col];
            const int before = widths[col];
            // Live strands in this column.
            const int live = e.type == EventType::LeftCusp ? before + 2 : before;
            for (int row = 0; row < live; ++row)
                grid[static_cast<std::size_t>(row)][col] = '-';
            const char glyph = e.type == EventType::LeftCusp     ? '<'
                               : e.type == EventType::RightCusp ? '>'
                                                                : 'X';
            grid[static_cast<std::size_t>(e.pos)][col] = glyph;
        }
        std::string out;
        for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
            out += *it;
            out += '\n';
        }
        return out;
    }

    // SVG: one column of 40 px per event, rows of 30 px, y increasing
    // upward handled by flipping rows; all coordinates integers.
    int width = 0, maxw = 0;
    for (const Event& e : f.events) {
        if (e.type == EventType::LeftCusp) width += 2;
        if (e.type == EventType::RightCusp) width -= 2;
        maxw = std::max(maxw, width);
    }
    const int colw = 40, rowh = 30, margin = 20;
    const int height = margin * 2 + rowh * (maxw > 0 ? maxw - 1 : 0) + 1;
    auto y_of = [&](int row) { return height - margin - row * rowh; };
    std::string body;
    auto line = [&](int x1, int y1, int x2, int y2) {
        body += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
                "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
    };
    // Semicircular cusp arc between two strand endpoints on the same x.
    auto arc = [&](int x, int y1, int y2, int sweep) {
        body += "<path d=\"M " + std::to_string(x) + " " + std::to_string(y1) + " A " +
                std::to_string(colw / 2) + " " + std::to_string(rowh / 2) + " 0 0 " +
                std::to_string(sweep) + " " + std::to_string(x) + " " +
                std::to_string(y2) + "\"/>\n";
    };
    width = 0;
    for (std::size_t col = 0; col < f.events.size(); ++col) {
        const Event& e = f.events[col];
        const int x0 = margin + static_cast<int>(col) * colw;
        const int x1 = x0 + colw;
        switch (e.type) {
            case EventType::LeftCusp:
                for (int row = 0; row < width; ++row) {
                    const int out_row = row < e.pos ? row : row + 2;
                    line(x0, y_of(row), x1, y_of(out_row));
                }
                arc(x1, y_of(e.pos), y_of(e.pos + 1), 1);
                width += 2;
                break;
            case EventType::RightCusp:
                for (int row = 0; row < width; ++row) {
                    if (row == e.pos || row == e.pos + 1) continue;
                    const int out_row = row < e.pos ? row : row - 2;
                    line(x0, y_of(row), x1, y_of(out_row));
                }
                arc(x0, y_of(e.pos), y_of(e.pos + 1), 0);
                width -= 2;
                break;
            case EventType::Crossing: {
                for (int row = 0; row < width; ++row) {
                    if (row == e.pos || row == e.pos + 1) continue;
                    line(x0, y_of(row), x1, y_of(row));
                }
                // The falling strand is in front; break the rising one.
                const int ylo = y_of(e.pos), yhi = y_of(e.pos + 1);
                line(x0, ylo, x0 + colw * 2 / 5, ylo + (yhi - ylo) * 2 / 5);
                line(x0 + colw * 3 / 5, ylo + (yhi - ylo) * 3 / 5, x1, yhi);
                line(x0, yhi, x1, ylo);
                break;
            }
        }
    }
    const int total_w = margin * 2 + colw * static_cast<int>(f.events.size());
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(total_w) + "\" height=\"" + std::to_string(height) +
                      "\">\n<g stroke=\"black\" fill=\"none\">\n";
    out += body;
    out += "</g>\n</svg>\n";
    return out;
}

FrontWord parse_ascii(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    if (rows.empty()) return FrontWord{};
    std::size_t cols = 0;
    for (const std::string& row : rows) cols = std::max(cols, row.size());
    FrontWord f;
    for (std::size_t col = 0; col < cols; ++col) {
        int found = 0;
        Event e;
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            const std::string& row = rows[ri];
            const char ch = col < row.size() ? row[col] : ' ';
            if (ch == '<' || ch == '>' || ch == 'X') {
                ++found;
                e.pos = static_cast<int>(rows.size() - 1 - ri);
                e.type = ch == '<'   ? EventType::LeftCusp
                         : ch == '>' ? EventType::RightCusp
                                     : EventType::Crossing;
            } else if (ch != '-' && ch != ' ') {
                throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                            "' in ascii front");
            }
        }
        if (found != 1)
            throw std::invalid_argument("ascii front needs exactly one event per column (column " +
                                        std::to_string(col) + ")");
        f.events.push_back(e);
    }
    return f;
}

}  // namespace legcalc::fronts
