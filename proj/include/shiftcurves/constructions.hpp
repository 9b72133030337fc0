#pragma once

#include <optional>
#include <vector>

#include "shiftcurves/geometry.hpp"
#include "shiftcurves/rational.hpp"
#include "shiftcurves/shift_graph.hpp"

namespace shiftcurves {

// Free constants of the 4-segment construction:
//   alpha   A-part x-spacing        beta  B-level spacing
//   gamma_b B right-end decrement   b1    first B right end
//   delta   D-part x-spacing
struct ParamProfile {
    Rational alpha;
    Rational beta;
    Rational gamma_b;
    Rational b1;
    Rational delta;

    // Unit spacings with b_r = 3N - 2(r-1); valid for every m >= 2.
    static ParamProfile canonical(int m);
    // The constants behind the published m = 4 picture.
    static ParamProfile figure();

    // Throws std::invalid_argument naming the violated inequality.
    void validate(int m) const;

    bool operator==(const ParamProfile& o) const = default;
};

enum class FamilyKind { FourSegment, ThreeSegment };

struct CurveFamily {
    int m = 0;
    FamilyKind kind = FamilyKind::FourSegment;
    std::optional<ParamProfile> profile;   // FourSegment only
    std::optional<Integer> stretch_base;   // ThreeSegment only
    std::vector<PolylineCurve> curves;     // lex order

    long curve_count() const { return static_cast<long>(curves.size()); }
};

// Rank of (j-1, m): the last B-part the A-part of c(i,j) crosses.
long up_rank(int i, int j, int m);
// Rank of (j+1, j+2) when j <= m-2: the first B-part the D-part crosses.
std::optional<long> down_rank(int i, int j, int m);

CurveFamily four_segment_family(int m, const ParamProfile& profile);

// Stretched realization: the A and B parts collapse into one segment whose
// left endpoint sits at x = -K^r. K must exceed 12 N^2 (default 12 N^2 + 1).
CurveFamily three_segment_family(int m, std::optional<Integer> stretch_base = std::nullopt);

// The common tangent x + y + beta = 0; requires alpha == beta.
Line touching_line(const ParamProfile& profile);

}  // namespace shiftcurves
