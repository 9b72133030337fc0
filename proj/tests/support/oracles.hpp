#pragma once

// Test-only oracles, kept independent of the library's implementation paths.

#include <random>

#include "shiftcurves/geometry.hpp"
#include "shiftcurves/shift_graph.hpp"

namespace shiftcurves::testing {

// Independent segment intersection oracle: Cramer's rule on the 2x2 system
// a1 + t*d1 = a2 + u*d2 with exact parameter-range checks; the collinear
// case falls back to 1-D parameter intervals along s1.
inline SegIntersection oracle_seg_intersect(const Segment& s1, const Segment& s2) {
    SegIntersection out;
    const Rational d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
    const Rational d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
    const Rational ex = s2.a.x - s1.a.x, ey = s2.a.y - s1.a.y;
    const Rational det = d1x * (-d2y) - (-d2x) * d1y;
    if (sgn(det) != 0) {
        const Rational t = (ex * (-d2y) - (-d2x) * ey) / det;
        const Rational u = (d1x * ey - ex * d1y) / det;
        if (t >= 0 && t <= 1 && u >= 0 && u <= 1) {
            out.kind = SegIntersection::Kind::SinglePoint;
            out.point = {s1.a.x + t * d1x, s1.a.y + t * d1y};
        }
        return out;
    }
    // Parallel directions. Solve for a2 on the supporting line of s1.
    const Rational mis = d1x * ey - d1y * ex;
    if (sgn(mis) != 0) return out;
    const Rational len = d1x * d1x + d1y * d1y;
    auto along = [&](const Point& p) {
        return ((p.x - s1.a.x) * d1x + (p.y - s1.a.y) * d1y) / len;
    };
    Rational lo = along(s2.a), hi = along(s2.b);
    if (lo > hi) std::swap(lo, hi);
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    if (lo > hi) return out;
    if (lo == hi) {
        out.kind = SegIntersection::Kind::SinglePoint;
        out.point = {s1.a.x + lo * d1x, s1.a.y + lo * d1y};
        return out;
    }
    out.kind = SegIntersection::Kind::Overlap;
    out.overlap_a = {s1.a.x + lo * d1x, s1.a.y + lo * d1y};
    out.overlap_b = {s1.a.x + hi * d1x, s1.a.y + hi * d1y};
    return out;
}

// Rational in [-10, 10] with denominator <= 16.
inline Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-160, 160);
    std::uniform_int_distribution<int> den(1, 16);
    return rational(num(rng), den(rng));
}

inline Point random_point(std::mt19937_64& rng) {
    return {random_small_rational(rng), random_small_rational(rng)};
}

inline Segment random_segment(std::mt19937_64& rng) {
    for (;;) {
        const Point a = random_point(rng);
        const Point b = random_point(rng);
        if (!(a == b)) return Segment(a, b);
    }
}

// Brute-force chromatic number: try every assignment for k = 1, 2, ...
inline bool brute_colorable(const std::vector<std::vector<int>>& adj, int k, size_t v,
                            std::vector<int>& colors) {
    if (v == adj.size()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : adj[v]) {
            if (static_cast<size_t>(u) < v && colors[u] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[v] = c;
        if (brute_colorable(adj, k, v + 1, colors)) return true;
    }
    return false;
}

inline int brute_chromatic(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(n, -1);
        if (brute_colorable(adj, k, 0, colors)) return k;
    }
    return n;
}

}  // namespace shiftcurves::testing
