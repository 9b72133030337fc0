#include <doctest.h>

#include <random>

#include "shiftcurves/constructions.hpp"
#include "shiftcurves/geometry.hpp"
#include "support/oracles.hpp"

using namespace shiftcurves;
namespace oracle = shiftcurves::testing;

namespace {

Point pt(long x, long y) {
    return {rational(x), rational(y)};
}

Point ptq(const char* x, const char* y) {
    return {rational_from_string(x), rational_from_string(y)};
}

}  // namespace

TEST_CASE("orient basic examples") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orient antisymmetry on random rational triples") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 500; ++it) {
        const Point p = oracle::random_point(rng);
        const Point q = oracle::random_point(rng);
        const Point r = oracle::random_point(rng);
        CHECK(orient(p, q, r) == -orient(p, r, q));
    }
}

TEST_CASE("degenerate segments are rejected") {
    CHECK_THROWS_AS(Segment(pt(1, 2), pt(1, 2)), std::invalid_argument);
}

TEST_CASE("seg_intersect classifies the three basic shapes") {
    const auto x = seg_intersect(Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0)));
    REQUIRE(x.kind == SegIntersection::Kind::SinglePoint);
    CHECK(x.point == pt(1, 1));

    const auto par = seg_intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 1), pt(1, 1)));
    CHECK(par.kind == SegIntersection::Kind::Empty);

    const auto ov = seg_intersect(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)));
    REQUIRE(ov.kind == SegIntersection::Kind::Overlap);
    CHECK(ov.overlap_a == pt(1, 0));
    CHECK(ov.overlap_b == pt(2, 0));
}

TEST_CASE("seg_intersect endpoint touching counts as a single point") {
    const auto touch = seg_intersect(Segment(pt(0, 0), pt(1, 1)), Segment(pt(1, 1), pt(2, 0)));
    REQUIRE(touch.kind == SegIntersection::Kind::SinglePoint);
    CHECK(touch.point == pt(1, 1));

    // Collinear segments meeting in exactly one endpoint.
    const auto joint = seg_intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(1, 0), pt(2, 0)));
    REQUIRE(joint.kind == SegIntersection::Kind::SinglePoint);
    CHECK(joint.point == pt(1, 0));
}

TEST_CASE("seg_intersect is symmetric and endpoint-order invariant") {
    std::mt19937_64 rng(7);
    auto same = [](const SegIntersection& a, const SegIntersection& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == SegIntersection::Kind::SinglePoint) return a.point == b.point;
        if (a.kind == SegIntersection::Kind::Overlap) {
            const bool fwd = a.overlap_a == b.overlap_a && a.overlap_b == b.overlap_b;
            const bool rev = a.overlap_a == b.overlap_b && a.overlap_b == b.overlap_a;
            return fwd || rev;
        }
        return true;
    };
    for (int it = 0; it < 1500; ++it) {
        const Segment s1 = oracle::random_segment(rng);
        const Segment s2 = oracle::random_segment(rng);
        const auto base = seg_intersect(s1, s2);
        CHECK(same(base, seg_intersect(s2, s1)));
        CHECK(same(base, seg_intersect(Segment(s1.b, s1.a), s2)));
        CHECK(same(base, seg_intersect(s1, Segment(s2.b, s2.a))));
    }
}

TEST_CASE("seg_intersect agrees with the independent linear-system oracle") {
    std::mt19937_64 rng(123456);
    for (int it = 0; it < 20000; ++it) {
        const Segment s1 = oracle::random_segment(rng);
        const Segment s2 = oracle::random_segment(rng);
        const auto got = seg_intersect(s1, s2);
        const auto want = oracle::oracle_seg_intersect(s1, s2);
        REQUIRE(got.kind == want.kind);
        if (got.kind == SegIntersection::Kind::SinglePoint) CHECK(got.point == want.point);
        if (got.kind == SegIntersection::Kind::Overlap) {
            CHECK(got.overlap_a == want.overlap_a);
            CHECK(got.overlap_b == want.overlap_b);
        }
    }
}

TEST_CASE("curve_pair_intersections on disjoint, figure, and overlapping curves") {
    PolylineCurve far_a{1, 2, {pt(0, 0), pt(1, 0)}, {'S'}};
    PolylineCurve far_b{1, 3, {pt(0, 5), pt(1, 5)}, {'S'}};
    const auto none = curve_pair_intersections(far_a, far_b);
    CHECK(none.points.empty());
    CHECK_FALSE(none.overlap_detected);

    const CurveFamily fam = four_segment_family(4, ParamProfile::figure());
    const auto hit = curve_pair_intersections(fam.curves[0], fam.curves[1]);
    REQUIRE(hit.points.size() == 1);
    CHECK(hit.points[0] == ptq("-1/5", "1/5"));
    CHECK_FALSE(hit.overlap_detected);

    const auto self = curve_pair_intersections(fam.curves[0], fam.curves[0]);
    CHECK(self.overlap_detected);
}

TEST_CASE("curve_pair_intersections is symmetric and matches per-segment enumeration") {
    const CurveFamily fam = four_segment_family(5, ParamProfile::canonical(5));
    for (size_t u = 0; u < fam.curves.size(); ++u) {
        for (size_t v = u + 1; v < fam.curves.size(); ++v) {
            const auto ab = curve_pair_intersections(fam.curves[u], fam.curves[v]);
            const auto ba = curve_pair_intersections(fam.curves[v], fam.curves[u]);
            CHECK(ab.points == ba.points);
            CHECK(ab.overlap_detected == ba.overlap_detected);
        }
    }
}

TEST_CASE("tangency_profile basic shapes") {
    const Line y0(rational(0), rational(1), rational(0));

    PolylineCurve above{1, 2, {pt(0, 1), pt(1, 1)}, {'S'}};
    CHECK(tangency_profile(above, y0).kind == TangencyKind::Disjoint);

    PolylineCurve wedge{1, 2, {pt(-1, 1), pt(0, 0), pt(1, 1)}, {'S', 'C'}};
    const auto t = tangency_profile(wedge, y0);
    REQUIRE(t.kind == TangencyKind::Touches);
    REQUIRE(t.touch_points.size() == 1);
    CHECK(t.touch_points[0] == pt(0, 0));

    PolylineCurve through{1, 2, {pt(0, -1), pt(0, 1)}, {'S'}};
    CHECK(tangency_profile(through, y0).kind == TangencyKind::Crosses);

    PolylineCurve zigzag{1, 2, {pt(0, 1), pt(1, 0), pt(2, -1)}, {'S', 'C'}};
    CHECK(tangency_profile(zigzag, y0).kind == TangencyKind::Crosses);

    PolylineCurve flat{1, 2, {pt(0, 0), pt(1, 0), pt(1, 1)}, {'S', 'C'}};
    CHECK(tangency_profile(flat, y0).kind == TangencyKind::OnLineOverlap);
}

TEST_CASE("line canonical form") {
    CHECK(Line(rational(2), rational(4), rational(6)) == Line(rational(1), rational(2), rational(3)));
    CHECK(Line(rational(-1), rational(1), rational(0)) == Line(rational(1), rational(-1), rational(0)));
    CHECK(Line(rational(1), rational(1), rational(1, 5)) ==
          Line(rational(5), rational(5), rational(1)));
    CHECK_THROWS_AS(Line(rational(0), rational(0), rational(1)), std::invalid_argument);
}

TEST_CASE("rational helpers") {
    CHECK(to_string(rational(2, 4)) == "1/2");
    CHECK(to_string(rational(-6, 3)) == "-2");
    CHECK(rational_from_string("-21/5") == rational(-21, 5));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
}
