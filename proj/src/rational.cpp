#include "shiftcurves/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftcurves {

Rational rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

double to_double_approx(const Rational& q) {
    return q.get_d();
}

namespace {

// Natural log of a positive big integer via mantissa/exponent split.
double log_mpz(const mpz_class& z) {
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * M_LN2;
}

}  // namespace

double signed_log_compress(const Rational& x) {
    int sg = sgn(x);
    if (sg == 0) return 0.0;
    Rational ax = abs(x);
    double d = ax.get_d();
    if (std::isfinite(d)) return sg * std::log1p(d);
    // |x| beyond double range: log(1+|x|) ~ log|x| = log num - log den.
    double l = log_mpz(ax.get_num()) - log_mpz(ax.get_den());
    return sg * l;
}

}  // namespace shiftcurves
