#pragma once

#include <string>

#include "qrc/laurent.hpp"
#include "qrc/rational.hpp"
#include "qrc/upoly.hpp"

namespace qrc {

// Element of Q(t), ordered by t positive-infinitesimal and valued t-adically.
// Canonical form: gcd(num, den) = 1 and the lowest-order coefficient of den
// is 1, so equality is structural. Reducedness puts min(ord num, ord den)
// at 0, hence v = ord(num) - ord(den) reads off directly.
class RatFuncElem {
public:
    RatFuncElem() : num_(), den_(UPoly<Rational>::constant(Rational(1))) {}
    // Constant embedding; lets generic field code build small literals.
    explicit RatFuncElem(long v)
        : num_(v == 0 ? UPoly<Rational>() : UPoly<Rational>::constant(Rational(v))),
          den_(UPoly<Rational>::constant(Rational(1))) {}
    RatFuncElem(UPoly<Rational> num, UPoly<Rational> den);

    static RatFuncElem from_rational(const Rational& c);
    static RatFuncElem t();

    const UPoly<Rational>& num() const { return num_; }
    const UPoly<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Sign for small t > 0: sign of the lowest-order numerator coefficient
    // (the denominator's is 1 by canonicity).
    int sgn() const { return num_.is_zero() ? 0 : sign(num_.trailing()); }
    VOrd vord() const;

    RatFuncElem operator-() const;
    friend RatFuncElem operator+(const RatFuncElem& a, const RatFuncElem& b);
    friend RatFuncElem operator-(const RatFuncElem& a, const RatFuncElem& b);
    friend RatFuncElem operator*(const RatFuncElem& a, const RatFuncElem& b);
    RatFuncElem recip() const;  // throws ZeroInput on zero
    friend RatFuncElem operator/(const RatFuncElem& a, const RatFuncElem& b) {
        return a * b.recip();
    }

    bool operator==(const RatFuncElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncElem& o) const { return !(*this == o); }

    // Value at t = 0; defined when vord >= 0.
    Rational value_at_zero() const;

    std::string str() const;  // `poly / poly`

private:
    UPoly<Rational> num_, den_;

    void reduce();
};

}  // namespace qrc
