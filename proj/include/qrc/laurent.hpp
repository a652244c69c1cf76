#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qrc/rational.hpp"
#include "qrc/truth.hpp"

namespace qrc {

// t-adic order of a truncated series: exactly k, at least k (all known
// coefficients vanish), or infinite (exact zero).
struct VOrd {
    enum class Kind { Known, AtLeast, Infinite };
    Kind kind;
    long k = 0;

    static VOrd known(long k) { return {Kind::Known, k}; }
    static VOrd at_least(long k) { return {Kind::AtLeast, k}; }
    static VOrd infinite() { return {Kind::Infinite, 0}; }
};

TruthValue vord_le(const VOrd& a, const VOrd& b);  // v_a <= v_b
TruthValue vord_lt(const VOrd& a, const VOrd& b);
TruthValue vord_eq(const VOrd& a, const VOrd& b);

// Truncated Laurent series over Q. Coefficients are known for exponents
// < known_until; within that window they are coeffs[e - start] when the
// index is in range and zero otherwise. Canonical form strips leading and
// trailing zeros, so coeffs.front()/back() are nonzero whenever the window
// is nonempty. known_until == kExact marks an exactly represented element
// (a Laurent polynomial). The zero-to-precision element has empty coeffs.
class LaurentElem {
public:
    static constexpr long kExact = std::numeric_limits<long>::max();

    LaurentElem() : start_(0), known_until_(kExact) {}  // exact zero

    static LaurentElem from_rational(const Rational& c);
    static LaurentElem t();
    // Series with window starting at `start`; known_until caps the window.
    static LaurentElem make(long start, std::vector<Rational> coeffs, long known_until);

    bool known_zero() const { return coeffs_.empty(); }  // zero to precision
    bool exact() const { return known_until_ == kExact; }
    long start() const { return start_; }
    long known_until() const { return known_until_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long e) const;  // within the known window only

    VOrd vord() const;

    LaurentElem operator-() const;
    friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);

    // Multiplicative inverse; requires a known leading coefficient. For
    // exact non-monomial inputs the (infinite) inverse series is produced to
    // exact_rel coefficients.
    LaurentElem recip(long exact_rel = 24) const;

    // Three-valued equality against exact zero, and versus another element.
    TruthValue is_zero3() const;
    friend TruthValue equal3(const LaurentElem& a, const LaurentElem& b) {
        return (a - b).is_zero3();
    }

    // Truncate to known_until = bound (no-op if already tighter).
    LaurentElem truncated(long bound) const;

    // `t^k*(c0 + c1*t + ...) + O(t^(k+N))`, `O(t^(k))`, or `0`.
    std::string str() const;

private:
    long start_;
    std::vector<Rational> coeffs_;
    long known_until_;

    void canonicalize();
    // Lower bound on the t-adic order (start when nonzero, known_until else).
    long ord_lower() const { return coeffs_.empty() ? known_until_ : start_; }
};

// Square root with r*r = s to s's precision; defined iff the order is even
// and the leading coefficient is a rational square. `default_precision`
// applies when s is exact. Throws ZeroInput on zero-to-precision input,
// NoSquareRoot otherwise.
LaurentElem series_sqrt(const LaurentElem& s, int default_precision = 24);

}  // namespace qrc
