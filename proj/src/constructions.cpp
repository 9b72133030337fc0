#include "shiftcurves/constructions.hpp"

#include <stdexcept>

namespace shiftcurves {

ParamProfile ParamProfile::canonical(int m) {
    if (m < 2) throw std::invalid_argument("canonical profile: m must be >= 2");
    const long n = static_cast<long>(m) * (m - 1) / 2;
    return {rational(1), rational(1), rational(2), rational(3 * n), rational(1)};
}

ParamProfile ParamProfile::figure() {
    return {rational(1, 5), rational(1, 5), rational(1, 2), rational(21, 5), rational(1, 5)};
}

void ParamProfile::validate(int m) const {
    if (m < 2) throw std::invalid_argument("profile: m must be >= 2");
    for (const Rational* q : {&alpha, &beta, &gamma_b, &b1, &delta})
        if (sgn(*q) <= 0) throw std::invalid_argument("profile: all constants must be positive");
    const long n = static_cast<long>(m) * (m - 1) / 2;
    if (!(gamma_b > beta))
        throw std::invalid_argument("profile: need gamma_b > beta (C-lines must strictly decrease)");
    const Rational b_last = b1 - gamma_b * Rational(n - 1);
    if (!(b_last > delta * Rational(n - 1)))
        throw std::invalid_argument(
            "profile: need b_N = b1 - gamma_b*(N-1) > delta*(N-1) "
            "(D x-positions must lie inside every B span)");
    for (long r = 1; r <= n; ++r) {
        const Rational b_r = b1 - gamma_b * Rational(r - 1);
        const Rational c_r = b_r + beta * Rational(r - 1);
        if (!(c_r - delta * Rational(r - 1) > beta * Rational(n)))
            throw std::invalid_argument(
                "profile: need c_r - delta*(r-1) > beta*N for all r "
                "(D tops must clear all B levels); fails at r = " + std::to_string(r));
    }
}

long up_rank(int i, int j, int m) {
    lex_rank(i, j, m);  // validates the pair
    return lex_rank(j - 1, m, m);
}

std::optional<long> down_rank(int i, int j, int m) {
    lex_rank(i, j, m);
    if (j > m - 2) return std::nullopt;
    return lex_rank(j + 1, j + 2, m);
}

CurveFamily four_segment_family(int m, const ParamProfile& profile) {
    profile.validate(m);
    const long n = static_cast<long>(m) * (m - 1) / 2;
    CurveFamily fam;
    fam.m = m;
    fam.kind = FamilyKind::FourSegment;
    fam.profile = profile;
    const Rational half = rational(1, 2);
    for (long r = 1; r <= n; ++r) {
        const PairVertex v = lex_unrank(r, m);
        const long up = up_rank(v.i, v.j, m);
        const long down = down_rank(v.i, v.j, m).value_or(n + 1);
        const Rational b_r = profile.b1 - profile.gamma_b * Rational(r - 1);
        const Rational c_r = b_r + profile.beta * Rational(r - 1);
        const Rational ax = -profile.alpha * Rational(r);
        const Rational by = profile.beta * Rational(r - 1);
        const Rational dx = profile.delta * Rational(r - 1);

        PolylineCurve c;
        c.i = v.i;
        c.j = v.j;
        c.vertices = {
            {ax, profile.beta * (Rational(up) - half)},            // A top
            {ax, by},                                              // A-B corner
            {b_r, by},                                             // B right end
            {dx, c_r - dx},                                        // C-D top
            {dx, profile.beta * (Rational(down) - 3 * half)},      // D bottom
        };
        c.part_tags = {'A', 'B', 'C', 'D'};
        fam.curves.push_back(std::move(c));
    }
    return fam;
}

CurveFamily three_segment_family(int m, std::optional<Integer> stretch_base) {
    if (m < 2) throw std::invalid_argument("three_segment_family: m must be >= 2");
    const long n = static_cast<long>(m) * (m - 1) / 2;
    const Integer bound = 12 * Integer(n) * Integer(n);
    const Integer k = stretch_base.value_or(bound + 1);
    if (k <= bound)
        throw std::invalid_argument("three_segment_family: stretch base K must exceed 12*N^2 = " +
                                    bound.get_str());
    const long c0 = 3 * n;
    const Rational half = rational(1, 2);
    CurveFamily fam;
    fam.m = m;
    fam.kind = FamilyKind::ThreeSegment;
    fam.stretch_base = k;
    Integer k_pow = 1;
    for (long r = 1; r <= n; ++r) {
        k_pow *= k;  // K^r
        const PairVertex v = lex_unrank(r, m);
        const long up = up_rank(v.i, v.j, m);
        const auto down = down_rank(v.i, v.j, m);
        const Rational right_end = rational(c0 - 2 * (r - 1));  // R_r
        const Rational d_bottom =
            down ? Rational(Rational(*down) - half) : Rational(Rational(n) + half);

        PolylineCurve c;
        c.i = v.i;
        c.j = v.j;
        c.vertices = {
            {Rational(-k_pow), Rational(up) + half},               // S left end
            {right_end, rational(r)},                              // S-C corner
            {rational(r - 1), rational(c0 + 3 - 2 * r)},           // C-D top
            {rational(r - 1), d_bottom},                           // D bottom
        };
        c.part_tags = {'S', 'C', 'D'};
        fam.curves.push_back(std::move(c));
    }
    return fam;
}

Line touching_line(const ParamProfile& profile) {
    if (profile.alpha != profile.beta)
        throw std::invalid_argument(
            "touching_line: tangency certificate requires alpha == beta");
    return Line(rational(1), rational(1), profile.beta);
}

}  // namespace shiftcurves
