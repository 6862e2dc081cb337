#include "legcalc/farey.hpp"

#include <numeric>
#include <stdexcept>

namespace legcalc::farey {

namespace {

// Extended gcd: returns g = gcd(a, b) and fills u, v with u*a + v*b = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t u1 = 0, v1 = 0;
    std::int64_t g = egcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0 in every call below.
    std::int64_t q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

// Circle layout: 0 sits at the top of the disk, infinity at the bottom.
// Walking clockwise from 0 first visits the nonnegative slopes in increasing
// order, then infinity, then the negative slopes in increasing order.
int circle_region(const Slope& s) {
    if (is_infinite(s)) return 1;
    return s.num >= 0 ? 0 : 2;
}

// Strict "a comes before b clockwise" relative to the start at 0.
bool cw_less(const Slope& a, const Slope& b) {
    const int ra = circle_region(a), rb = circle_region(b);
    if (ra != rb) return ra < rb;
    if (ra == 1) return false;
    return a.num * b.den < b.num * a.den;
}

// 2x2 integer matrix acting on slopes as columns (num, den).
struct Mobius {
    std::int64_t a, b, c, d;

    Slope apply(const Slope& s) const {
        return make_slope(a * s.num + b * s.den, c * s.num + d * s.den);
    }
    Mobius inverse() const {
        // Valid for determinant +1.
        return Mobius{d, -b, -c, a};
    }
};

// Determinant-one matrix sending s to infinity.  Farey edges and the
// clockwise order of the circle are preserved by every such matrix, which
// reduces path finding to the case of an arc that starts at infinity.
Mobius send_to_infinity(const Slope& s) {
    std::int64_t u = 0, v = 0;
    egcd(s.num, s.den, u, v);
    return Mobius{-u, -v, s.den, -s.num};
}

}  // namespace

Slope make_slope(std::int64_t num, std::int64_t den) {
    if (num == 0 && den == 0) throw std::domain_error("slope 0/0 is undefined");
    if (den == 0) return Slope{1, 0};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return Slope{num / g, den / g};
}

Slope infinity_slope() { return Slope{1, 0}; }

bool is_infinite(const Slope& s) { return s.den == 0; }

std::string to_string(const Slope& s) {
    if (is_infinite(s)) return "inf";
    if (s.den == 1) return std::to_string(s.num);
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "-inf") return infinity_slope();
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            size_t used = 0;
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return make_slope(n, 1);
        }
        size_t used_n = 0, used_d = 0;
        const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        const std::int64_t n = std::stoll(ns, &used_n);
        const std::int64_t d = std::stoll(ds, &used_d);
        if (used_n != ns.size() || used_d != ds.size()) throw std::invalid_argument(text);
        return make_slope(n, d);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a slope: '" + text + "'");
    }
}

std::int64_t intersection_number(const Slope& s, const Slope& t) {
    const std::int64_t x = s.num * t.den - t.num * s.den;
    return x < 0 ? -x : x;
}

bool is_edge(const Slope& s, const Slope& t) {
    return intersection_number(s, t) == 1;
}

Slope mediant(const Slope& a, const Slope& b) {
    if (a == b) throw std::domain_error("undefined-mediant: equal slopes");
    // Infinity acts as +1/0 against the right half of the disk (including 0)
    // and as -1/0 against the left half, keeping the mediant between its
    // arguments.
    Slope x = a, y = b;
    if (is_infinite(x)) x = Slope{y.num < 0 ? -1 : 1, 0};
    if (is_infinite(y)) y = Slope{x.num < 0 ? -1 : 1, 0};
    return make_slope(x.num + y.num, x.den + y.den);
}

bool clockwise_contains(const Slope& s0, const Slope& s1, const Slope& s) {
    if (s0 == s1) return s == s0;
    const bool wraps = !cw_less(s0, s1);
    const bool after_start = !cw_less(s, s0);
    const bool before_end = !cw_less(s1, s);
    if (!wraps) return after_start && before_end;
    return after_start || before_end;
}

FareyPath minimal_path(const Slope& s0, const Slope& s1) {
    if (s0 == s1) throw std::domain_error("minimal_path endpoints must differ");

    const Mobius fwd = send_to_infinity(s0);
    const Mobius back = fwd.inverse();
    const Slope t = fwd.apply(s1);
    // With s0 at infinity the clockwise arc sweeps the finite slopes in
    // increasing order, so the target is reached by a strictly increasing
    // chain.  Each hop goes to the largest Farey neighbour of the current
    // vertex that does not overshoot t; that greedy choice is the unique
    // shortest monotone route.
    FareyPath out;
    out.vertices.push_back(s0);

    Slope cur = make_slope(floor_div(t.num, t.den), 1);
    out.vertices.push_back(back.apply(cur));
    while (cur != t) {
        // Neighbours of cur = a/b lying above it are (x0 + j*a)/(y0 + j*b),
        // j >= 0, decreasing towards cur; (x0, y0) solves a*y - x*b = -1
        // with minimal positive y.
        const std::int64_t a = cur.num, b = cur.den;
        std::int64_t u = 0, v = 0;
        egcd(a, b, u, v);  // u*a + v*b = 1
        // a*y - x*b = -1 has the particular solution (x, y) = (u, -v) scaled:
        // a*(-v) - u*b = -(u*b + v*a)?  Solve directly instead:
        // try y0 in [1, b] with a*y0 ≡ -1 (mod b)  =>  y0 = ((-u) mod b).
        std::int64_t y0, x0;
        if (b == 1) {
            y0 = 1;
            x0 = a + 1;
        } else {
            y0 = ((-u) % b + b) % b;
            if (y0 == 0) y0 = b;
            x0 = (a * y0 + 1) / b;
        }
        const std::int64_t A = x0 * t.den - t.num * y0;  // u_j <= t  <=>  j*(a*pt - qt*b) <= qt*y0 - x0*pt
        const std::int64_t slope_gap = a * t.den - t.num * b;  // negative since cur < t
        std::int64_t j = 0;
        if (A > 0) j = ceil_div(A, -slope_gap);
        cur = make_slope(x0 + j * a, y0 + j * b);
        out.vertices.push_back(back.apply(cur));
    }
    return out;
}

}  // namespace legcalc::farey
