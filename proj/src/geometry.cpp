#include "shiftcurves/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shiftcurves {

std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == b) throw std::invalid_argument("Segment: degenerate (a == b) at " + to_string(a));
}

namespace {

// Scales (a, b, c) to coprime integers with the first nonzero one positive.
void canonicalize_line(Rational& a, Rational& b, Rational& c) {
    Integer lcm_den = 1;
    mpz_lcm(lcm_den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    Integer ia(a.get_num() * (lcm_den / a.get_den()));
    Integer ib(b.get_num() * (lcm_den / b.get_den()));
    Integer ic(c.get_num() * (lcm_den / c.get_den()));
    Integer g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
    if (sgn(g) != 0) {
        ia /= g;
        ib /= g;
        ic /= g;
    }
    int lead = sgn(ia) != 0 ? sgn(ia) : sgn(ib);
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    a = Rational(ia);
    b = Rational(ib);
    c = Rational(ic);
}

}  // namespace

Line::Line(const Rational& a_, const Rational& b_, const Rational& c_) : a(a_), b(b_), c(c_) {
    if (sgn(a) == 0 && sgn(b) == 0) throw std::invalid_argument("Line: (a, b) must be nonzero");
    canonicalize_line(a, b, c);
}

int Line::side(const Point& p) const {
    return sgn(a * p.x + b * p.y + c);
}

int orient(const Point& p, const Point& q, const Point& r) {
    return sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}

SegIntersection seg_intersect(const Segment& s1, const Segment& s2) {
    const Rational dx1 = s1.b.x - s1.a.x, dy1 = s1.b.y - s1.a.y;
    const Rational dx2 = s2.b.x - s2.a.x, dy2 = s2.b.y - s2.a.y;
    const Rational denom = dx1 * dy2 - dy1 * dx2;
    const Rational ex = s2.a.x - s1.a.x, ey = s2.a.y - s1.a.y;

    SegIntersection out;
    if (sgn(denom) != 0) {
        const Rational t = (ex * dy2 - ey * dx2) / denom;
        const Rational u = (ex * dy1 - ey * dx1) / denom;
        if (sgn(t) >= 0 && t <= 1 && sgn(u) >= 0 && u <= 1) {
            out.kind = SegIntersection::Kind::SinglePoint;
            out.point = {s1.a.x + t * dx1, s1.a.y + t * dy1};
        }
        return out;
    }
    // Parallel. Distinct supporting lines meet nowhere.
    if (sgn(ex * dy1 - ey * dx1) != 0) return out;
    // Collinear: compare parameters of s2's endpoints along s1.
    const Rational len2 = dx1 * dx1 + dy1 * dy1;
    // Explicit return type: gmpxx expression templates must not outlive the body.
    auto param = [&](const Point& p) -> Rational {
        return ((p.x - s1.a.x) * dx1 + (p.y - s1.a.y) * dy1) / len2;
    };
    Rational t0 = param(s2.a), t1 = param(s2.b);
    if (t0 > t1) std::swap(t0, t1);
    Rational lo = std::max(Rational(0), t0);
    Rational hi = std::min(Rational(1), t1);
    if (lo > hi) return out;
    Point plo{s1.a.x + lo * dx1, s1.a.y + lo * dy1};
    if (lo == hi) {
        out.kind = SegIntersection::Kind::SinglePoint;
        out.point = plo;
        return out;
    }
    out.kind = SegIntersection::Kind::Overlap;
    out.overlap_a = plo;
    out.overlap_b = {s1.a.x + hi * dx1, s1.a.y + hi * dy1};
    return out;
}

Segment PolylineCurve::segment(int k) const {
    return Segment(vertices.at(k), vertices.at(k + 1));
}

CurveIntersections curve_pair_intersections(const PolylineCurve& c1, const PolylineCurve& c2) {
    CurveIntersections out;
    std::set<Point> pts;
    for (int a = 0; a < c1.segment_count(); ++a) {
        const Segment sa = c1.segment(a);
        for (int b = 0; b < c2.segment_count(); ++b) {
            const SegIntersection hit = seg_intersect(sa, c2.segment(b));
            switch (hit.kind) {
                case SegIntersection::Kind::Empty:
                    break;
                case SegIntersection::Kind::SinglePoint:
                    pts.insert(hit.point);
                    break;
                case SegIntersection::Kind::Overlap:
                    out.overlap_detected = true;
                    pts.insert(hit.overlap_a);
                    pts.insert(hit.overlap_b);
                    break;
            }
        }
    }
    out.points.assign(pts.begin(), pts.end());
    return out;
}

bool is_simple_polyline(const PolylineCurve& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = static_cast<int>(c.vertices.size());
    if (n < 2) return fail("fewer than 2 vertices");
    for (int k = 0; k + 1 < n; ++k)
        if (c.vertices[k] == c.vertices[k + 1])
            return fail("repeated consecutive vertex " + to_string(c.vertices[k]));
    for (int a = 0; a + 1 < n - 1; ++a) {
        for (int b = a + 1; b < n - 1; ++b) {
            const SegIntersection hit = seg_intersect(c.segment(a), c.segment(b));
            if (b == a + 1) {
                // Adjacent segments must meet exactly at the shared vertex.
                if (hit.kind != SegIntersection::Kind::SinglePoint || hit.point != c.vertices[b])
                    return fail("adjacent segments " + std::to_string(a) + "," + std::to_string(b) +
                                " do not meet only at the shared vertex");
            } else if (hit.kind != SegIntersection::Kind::Empty) {
                return fail("non-adjacent segments " + std::to_string(a) + "," + std::to_string(b) +
                            " intersect");
            }
        }
    }
    return true;
}

TangencyProfile tangency_profile(const PolylineCurve& c, const Line& L) {
    TangencyProfile out;
    bool pos = false, neg = false;
    std::set<Point> touches;
    const int n = static_cast<int>(c.vertices.size());
    std::vector<int> sides(n);
    for (int k = 0; k < n; ++k) {
        sides[k] = L.side(c.vertices[k]);
        if (sides[k] > 0) pos = true;
        if (sides[k] < 0) neg = true;
        if (sides[k] == 0) touches.insert(c.vertices[k]);
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (sides[k] == 0 && sides[k + 1] == 0) {
            out.kind = TangencyKind::OnLineOverlap;
            return out;
        }
    }
    // A segment's interior stays strictly between its endpoint values, so
    // vertex signs determine everything once on-line segments are excluded.
    if (pos && neg) {
        out.kind = TangencyKind::Crosses;
        return out;
    }
    if (touches.empty()) {
        out.kind = TangencyKind::Disjoint;
        return out;
    }
    out.kind = TangencyKind::Touches;
    out.touch_points.assign(touches.begin(), touches.end());
    return out;
}

}  // namespace shiftcurves
