#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "shiftcurves/constructions.hpp"
#include "shiftcurves/geometry.hpp"
#include "shiftcurves/shift_graph.hpp"

namespace shiftcurves {

enum class PairRelation { Intersect, Disjoint };

// For u lex-before v: the curves intersect iff j_u != i_v (complement of the
// shift-graph edge rule restricted to ordered pairs).
PairRelation combinatorial_oracle(const PairVertex& u, const PairVertex& v);

// How curves of ranks r < s are expected to meet: through the A (or S) part
// of r crossing the B (or S) part of s, through the D part of r crossing the
// B (or S) part of s, or not at all.
enum class PairExpectation { CrossViaAB, CrossViaDB, Disjoint };

PairExpectation expected_classification(long r, long s, int m);

struct PartHit {
    char tag_r;  // part of the lower-rank curve
    char tag_s;  // part of the higher-rank curve
    Point point;
};

struct PairClassification {
    long r = 0;
    long s = 0;
    PairExpectation expected = PairExpectation::Disjoint;
    std::vector<PartHit> observed;
    bool pass = false;
};

// Graph on the family's vertices with an edge exactly when the two curves
// share no point. Throws on a positive-length overlap between curves.
ShiftGraph disjointness_graph(const CurveFamily& f);

std::vector<PairClassification> part_pattern_audit(const CurveFamily& f);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    int m = 0;
    FamilyKind kind = FamilyKind::FourSegment;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool pass() const;
    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    bool check_chromatic = false;
    long long chi_budget = 50'000'000;
    // Compare coordinates against regeneration from the declared parameters.
    bool check_fidelity = true;
};

// Runs the full battery: segment counts, simplicity, pairwise intersection
// cardinality, graph identity with H_m, part-pattern audit, triangle
// freeness, tangency to the common line (4-segment, alpha == beta), and
// optionally the chromatic checks.
VerificationReport verify_family(const CurveFamily& f, const VerifyOptions& options = {});

std::string report_to_text(const VerificationReport& report);

}  // namespace shiftcurves
