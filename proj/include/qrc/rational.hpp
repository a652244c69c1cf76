#pragma once

#include <gmpxx.h>

#include <string>

namespace qrc {

using Integer = mpz_class;

// Exact rational arithmetic. Values are kept canonical (gcd(num, den) = 1,
// den > 0): GMP preserves canonicity through +,-,*,/ as long as inputs are
// canonical, so the only construction that needs care is the num/den pair.
// Always go through make_rational for that.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1), b(base);
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace qrc
