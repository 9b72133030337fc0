#pragma once

#include <string>
#include <vector>

#include "shiftcurves/rational.hpp"

namespace shiftcurves {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

std::string to_string(const Point& p);

// Non-degenerate straight-line segment; a == b is rejected.
struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_);
};

// a*x + b*y + c = 0 in canonical integer form: coefficients coprime,
// first nonzero one positive.
struct Line {
    Rational a;
    Rational b;
    Rational c;

    Line(const Rational& a_, const Rational& b_, const Rational& c_);

    // Sign of a*x + b*y + c at p.
    int side(const Point& p) const;

    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Sign of the cross product (q - p) x (r - p).
int orient(const Point& p, const Point& q, const Point& r);

struct SegIntersection {
    enum class Kind { Empty, SinglePoint, Overlap };
    Kind kind = Kind::Empty;
    Point point;      // valid when kind == SinglePoint
    Point overlap_a;  // valid when kind == Overlap, ordered along s1
    Point overlap_b;
};

// Exact classification of s1 cap s2. Endpoint touchings are SinglePoint;
// collinear overlaps of positive length are Overlap.
SegIntersection seg_intersect(const Segment& s1, const Segment& s2);

// Labeled polyline; 4 vertices for the 3-segment kind, 5 for the 4-segment
// kind. part_tags[k] labels segment k ('S','C','D' or 'A','B','C','D').
struct PolylineCurve {
    int i = 0;
    int j = 0;
    std::vector<Point> vertices;
    std::vector<char> part_tags;

    int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
    Segment segment(int k) const;
};

struct CurveIntersections {
    std::vector<Point> points;  // deduplicated, sorted
    bool overlap_detected = false;
};

// Exact point set of c1 cap c2 over all segment pairs.
CurveIntersections curve_pair_intersections(const PolylineCurve& c1, const PolylineCurve& c2);

// Simplicity: consecutive vertices distinct, adjacent segments meet only at
// their shared vertex, non-adjacent segments are disjoint.
bool is_simple_polyline(const PolylineCurve& c, std::string* why = nullptr);

enum class TangencyKind { Disjoint, Touches, Crosses, OnLineOverlap };

struct TangencyProfile {
    TangencyKind kind = TangencyKind::Disjoint;
    std::vector<Point> touch_points;  // valid when kind == Touches
};

// Crosses: points strictly on both sides of L. Touches: nonempty finite
// contact set, curve within one closed half-plane. OnLineOverlap: a
// positive-length portion of the curve lies inside L.
TangencyProfile tangency_profile(const PolylineCurve& c, const Line& L);

}  // namespace shiftcurves
