#include "shiftcurves/verification.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shiftcurves {

PairRelation combinatorial_oracle(const PairVertex& u, const PairVertex& v) {
    if (!(u < v)) throw std::invalid_argument("combinatorial_oracle: need u lex-before v");
    return u.j != v.i ? PairRelation::Intersect : PairRelation::Disjoint;
}

PairExpectation expected_classification(long r, long s, int m) {
    if (r >= s) throw std::invalid_argument("expected_classification: need r < s");
    const PairVertex u = lex_unrank(r, m);
    const long up = up_rank(u.i, u.j, m);
    const auto down = down_rank(u.i, u.j, m);
    if (s <= up) return PairExpectation::CrossViaAB;
    if (down && s >= *down) return PairExpectation::CrossViaDB;
    return PairExpectation::Disjoint;
}

ShiftGraph disjointness_graph(const CurveFamily& f) {
    ShiftGraph g;
    g.m = f.m;
    for (const PolylineCurve& c : f.curves) g.vertices.push_back({c.i, c.j});
    const int n = static_cast<int>(f.curves.size());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const CurveIntersections hits = curve_pair_intersections(f.curves[u], f.curves[v]);
            if (hits.overlap_detected)
                throw std::runtime_error("disjointness_graph: positive-length overlap between (" +
                                         std::to_string(f.curves[u].i) + "," +
                                         std::to_string(f.curves[u].j) + ") and (" +
                                         std::to_string(f.curves[v].i) + "," +
                                         std::to_string(f.curves[v].j) + ")");
            if (hits.points.empty()) g.edges.emplace_back(u, v);
        }
    }
    finalize_edges(g);
    return g;
}

namespace {

bool strictly_interior(const Point& p, const Segment& s) {
    return p != s.a && p != s.b;
}

std::string pair_label(const PolylineCurve& a, const PolylineCurve& b) {
    return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")x(" + std::to_string(b.i) +
           "," + std::to_string(b.j) + ")";
}

}  // namespace

std::vector<PairClassification> part_pattern_audit(const CurveFamily& f) {
    const bool four = f.kind == FamilyKind::FourSegment;
    const char cross_lo_ab = four ? 'A' : 'S';  // part of curve r in an AB-type crossing
    const char cross_hi = four ? 'B' : 'S';     // part of curve s in either crossing
    std::vector<PairClassification> out;
    const long n = f.curve_count();
    for (long r = 1; r <= n; ++r) {
        for (long s = r + 1; s <= n; ++s) {
            const PolylineCurve& cr = f.curves[r - 1];
            const PolylineCurve& cs = f.curves[s - 1];
            PairClassification pc;
            pc.r = r;
            pc.s = s;
            pc.expected = expected_classification(r, s, f.m);
            bool interior_ok = true;
            for (int a = 0; a < cr.segment_count(); ++a) {
                for (int b = 0; b < cs.segment_count(); ++b) {
                    const Segment sa = cr.segment(a);
                    const Segment sb = cs.segment(b);
                    const SegIntersection hit = seg_intersect(sa, sb);
                    if (hit.kind == SegIntersection::Kind::Empty) continue;
                    if (hit.kind == SegIntersection::Kind::Overlap) {
                        interior_ok = false;
                        pc.observed.push_back({cr.part_tags[a], cs.part_tags[b], hit.overlap_a});
                        continue;
                    }
                    pc.observed.push_back({cr.part_tags[a], cs.part_tags[b], hit.point});
                    if (!strictly_interior(hit.point, sa) || !strictly_interior(hit.point, sb))
                        interior_ok = false;
                }
            }
            switch (pc.expected) {
                case PairExpectation::Disjoint:
                    pc.pass = pc.observed.empty();
                    break;
                case PairExpectation::CrossViaAB:
                    pc.pass = interior_ok && pc.observed.size() == 1 &&
                              pc.observed[0].tag_r == cross_lo_ab &&
                              pc.observed[0].tag_s == cross_hi;
                    break;
                case PairExpectation::CrossViaDB:
                    pc.pass = interior_ok && pc.observed.size() == 1 &&
                              pc.observed[0].tag_r == 'D' && pc.observed[0].tag_s == cross_hi;
                    break;
            }
            out.push_back(std::move(pc));
        }
    }
    return out;
}

bool VerificationReport::pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

using CheckFn = std::function<CheckResult()>;

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    try {
        res.detail = body();  // empty string means pass
        res.pass = res.detail.empty();
        if (res.pass) res.detail = "ok";
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    return res;
}

std::string check_structure(const CurveFamily& f) {
    if (f.m < 2) return "m < 2";
    const long n = static_cast<long>(f.m) * (f.m - 1) / 2;
    if (f.curve_count() != n)
        return "expected " + std::to_string(n) + " curves, found " + std::to_string(f.curve_count());
    const int want_segments = f.kind == FamilyKind::FourSegment ? 4 : 3;
    const std::vector<char> want_tags = f.kind == FamilyKind::FourSegment
                                            ? std::vector<char>{'A', 'B', 'C', 'D'}
                                            : std::vector<char>{'S', 'C', 'D'};
    for (long r = 1; r <= n; ++r) {
        const PolylineCurve& c = f.curves[r - 1];
        const PairVertex expect = lex_unrank(r, f.m);
        if (c.i != expect.i || c.j != expect.j)
            return "curve at rank " + std::to_string(r) + " is labeled (" + std::to_string(c.i) +
                   "," + std::to_string(c.j) + "), expected (" + std::to_string(expect.i) + "," +
                   std::to_string(expect.j) + ")";
        if (c.segment_count() != want_segments)
            return "curve (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") has " +
                   std::to_string(c.segment_count()) + " segments, expected " +
                   std::to_string(want_segments);
        if (c.part_tags != want_tags)
            return "curve (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                   ") has unexpected part tags";
    }
    return "";
}

std::string check_simplicity(const CurveFamily& f) {
    for (const PolylineCurve& c : f.curves) {
        std::string why;
        if (!is_simple_polyline(c, &why))
            return "curve (" + std::to_string(c.i) + "," + std::to_string(c.j) + "): " + why;
    }
    return "";
}

std::string check_pair_cardinality(const CurveFamily& f) {
    const long n = f.curve_count();
    for (long u = 0; u < n; ++u) {
        for (long v = u + 1; v < n; ++v) {
            const CurveIntersections hits = curve_pair_intersections(f.curves[u], f.curves[v]);
            if (hits.overlap_detected)
                return "positive-length overlap at " + pair_label(f.curves[u], f.curves[v]);
            if (hits.points.size() > 1)
                return pair_label(f.curves[u], f.curves[v]) + " meets in " +
                       std::to_string(hits.points.size()) + " points, first " +
                       to_string(hits.points[0]) + " and " + to_string(hits.points[1]);
        }
    }
    return "";
}

std::string check_graph_identity(const CurveFamily& f) {
    const ShiftGraph expected = build_shift_graph(f.m);
    const ShiftGraph actual = disjointness_graph(f);
    if (actual.edges == expected.edges) return "";
    // Name the first differing pair.
    const long n = f.curve_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool want = expected.has_edge(u, v);
            const bool got = actual.has_edge(u, v);
            if (want != got)
                return pair_label(f.curves[u], f.curves[v]) + ": expected " +
                       (want ? "disjoint (edge)" : "intersecting (non-edge)") + ", curves are " +
                       (got ? "disjoint" : "intersecting");
        }
    }
    return "edge sets differ";
}

std::string check_part_pattern(const CurveFamily& f) {
    for (const PairClassification& pc : part_pattern_audit(f)) {
        if (pc.pass) continue;
        std::ostringstream os;
        os << pair_label(f.curves[pc.r - 1], f.curves[pc.s - 1]) << ": expected ";
        switch (pc.expected) {
            case PairExpectation::Disjoint: os << "no part contact"; break;
            case PairExpectation::CrossViaAB: os << "one A/S x B/S crossing"; break;
            case PairExpectation::CrossViaDB: os << "one D x B/S crossing"; break;
        }
        os << ", observed " << pc.observed.size() << " contact(s)";
        for (const PartHit& h : pc.observed)
            os << " [" << h.tag_r << "x" << h.tag_s << " at " << to_string(h.point) << "]";
        return os.str();
    }
    return "";
}

std::string check_triangle_free(const CurveFamily& f) {
    if (!is_triangle_free(build_shift_graph(f.m))) return "H_m contains a triangle";
    if (!is_triangle_free(disjointness_graph(f)))
        return "disjointness graph contains a triangle";
    return "";
}

std::string check_tangency(const CurveFamily& f) {
    const Line line = touching_line(*f.profile);
    std::set<Point> seen;
    for (const PolylineCurve& c : f.curves) {
        const std::string label = "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
        const TangencyProfile tp = tangency_profile(c, line);
        if (tp.kind == TangencyKind::Crosses) return "curve " + label + " crosses the line";
        if (tp.kind == TangencyKind::OnLineOverlap)
            return "curve " + label + " contains a positive-length piece of the line";
        if (tp.kind == TangencyKind::Disjoint) return "curve " + label + " misses the line";
        if (tp.touch_points.size() != 1)
            return "curve " + label + " touches in " + std::to_string(tp.touch_points.size()) +
                   " points";
        if (tp.touch_points[0] != c.vertices[1])
            return "curve " + label + " touches at " + to_string(tp.touch_points[0]) +
                   ", not at its A-B corner";
        if (!seen.insert(tp.touch_points[0]).second)
            return "duplicate touch point " + to_string(tp.touch_points[0]);
    }
    return "";
}

std::string check_chromatic(const CurveFamily& f, long long budget) {
    const int expected = ceil_log2(f.m);
    const Coloring fc = formula_coloring(f.m);
    const ShiftGraph g = build_shift_graph(f.m);
    if (!is_proper(g.adjacency, fc)) return "formula coloring is not proper";
    if (fc.count_colors() != expected)
        return "formula coloring uses " + std::to_string(fc.count_colors()) + " colors, expected " +
               std::to_string(expected);
    const ChromaticResult res = chromatic_number_exact(g, budget);
    if (!res.conclusive) return "chromatic search budget exhausted (inconclusive)";
    if (res.chi != expected)
        return "chi(H_m) = " + std::to_string(res.chi) + ", expected " + std::to_string(expected);
    if (!is_proper(g.adjacency, res.witness)) return "chromatic witness is not proper";
    return "";
}

std::string check_fidelity(const CurveFamily& f) {
    CurveFamily regenerated;
    if (f.kind == FamilyKind::FourSegment) {
        if (!f.profile) return "";  // no declared parameters to check against
        regenerated = four_segment_family(f.m, *f.profile);
    } else {
        if (!f.stretch_base) return "";
        regenerated = three_segment_family(f.m, *f.stretch_base);
    }
    if (regenerated.curve_count() != f.curve_count()) return "curve count mismatch";
    for (long r = 0; r < f.curve_count(); ++r) {
        if (f.curves[r].vertices != regenerated.curves[r].vertices)
            return "curve (" + std::to_string(f.curves[r].i) + "," +
                   std::to_string(f.curves[r].j) +
                   ") differs from regeneration with the declared parameters";
    }
    return "";
}

}  // namespace

VerificationReport verify_family(const CurveFamily& f, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.m = f.m;
    report.kind = f.kind;

    report.checks.push_back(run_check("structure", [&] { return check_structure(f); }));
    report.checks.push_back(run_check("simplicity", [&] { return check_simplicity(f); }));
    report.checks.push_back(
        run_check("pair_cardinality", [&] { return check_pair_cardinality(f); }));
    report.checks.push_back(run_check("graph_identity", [&] { return check_graph_identity(f); }));
    report.checks.push_back(run_check("part_pattern", [&] { return check_part_pattern(f); }));
    report.checks.push_back(run_check("triangle_free", [&] { return check_triangle_free(f); }));

    const bool tangency_applies = f.kind == FamilyKind::FourSegment && f.profile &&
                                  f.profile->alpha == f.profile->beta;
    if (tangency_applies) {
        report.checks.push_back(run_check("tangency", [&] { return check_tangency(f); }));
    } else {
        report.checks.push_back(
            {"tangency", true, "skipped (claimed only for 4-segment families with alpha == beta)"});
    }

    if (options.check_chromatic)
        report.checks.push_back(
            run_check("chromatic", [&] { return check_chromatic(f, options.chi_budget); }));

    if (options.check_fidelity)
        report.checks.push_back(run_check("generator_fidelity", [&] { return check_fidelity(f); }));

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "family: m=" << report.m << " kind="
       << (report.kind == FamilyKind::FourSegment ? "four_segment" : "three_segment") << "\n";
    for (const CheckResult& c : report.checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    os << (report.pass() ? "VERIFIED" : "REFUTED") << " in " << report.elapsed_seconds << " s\n";
    return os.str();
}

}  // namespace shiftcurves
