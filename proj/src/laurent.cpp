#include "qrc/laurent.hpp"

#include <algorithm>

#include "qrc/errors.hpp"

namespace qrc {

TruthValue vord_le(const VOrd& a, const VOrd& b) {
    using K = VOrd::Kind;
    switch (a.kind) {
        case K::Known:
            if (b.kind == K::Known) return tv(a.k <= b.k);
            if (b.kind == K::Infinite) return TruthValue::True;
            return a.k <= b.k ? TruthValue::True : TruthValue::Indeterminate;
        case K::AtLeast:
            if (b.kind == K::Infinite) return TruthValue::True;
            if (b.kind == K::Known && a.k > b.k) return TruthValue::False;
            return TruthValue::Indeterminate;
        case K::Infinite:
            if (b.kind == K::Known) return TruthValue::False;
            if (b.kind == K::Infinite) return TruthValue::True;
            return TruthValue::Indeterminate;
    }
    return TruthValue::Indeterminate;
}

TruthValue vord_lt(const VOrd& a, const VOrd& b) {
    using K = VOrd::Kind;
    switch (a.kind) {
        case K::Known:
            if (b.kind == K::Known) return tv(a.k < b.k);
            if (b.kind == K::Infinite) return TruthValue::True;
            return a.k < b.k ? TruthValue::True : TruthValue::Indeterminate;
        case K::AtLeast:
            if (b.kind == K::Infinite) return TruthValue::True;
            if (b.kind == K::Known && a.k >= b.k) return TruthValue::False;
            return TruthValue::Indeterminate;
        case K::Infinite:
            return TruthValue::False;  // nothing exceeds an infinite order
    }
    return TruthValue::Indeterminate;
}

TruthValue vord_eq(const VOrd& a, const VOrd& b) {
    return tv_and(vord_le(a, b), vord_le(b, a));
}

namespace {

// known_until arithmetic saturates at the exact marker.
long sat_add(long a, long b) {
    if (a == LaurentElem::kExact || b == LaurentElem::kExact) return LaurentElem::kExact;
    return a + b;
}

}  // namespace

void LaurentElem::canonicalize() {
    // Drop window content at or beyond known_until.
    if (known_until_ != kExact && !coeffs_.empty()) {
        long end = start_ + static_cast<long>(coeffs_.size());
        if (end > known_until_) {
            long keep = known_until_ - start_;
            coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
        }
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        start_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.empty()) start_ = 0;
}

LaurentElem LaurentElem::from_rational(const Rational& c) {
    LaurentElem e;
    if (!is_zero(c)) {
        e.start_ = 0;
        e.coeffs_ = {c};
    }
    return e;  // known_until = kExact
}

LaurentElem LaurentElem::t() {
    LaurentElem e;
    e.start_ = 1;
    e.coeffs_ = {Rational(1)};
    return e;
}

LaurentElem LaurentElem::make(long start, std::vector<Rational> coeffs, long known_until) {
    LaurentElem e;
    e.start_ = start;
    e.coeffs_ = std::move(coeffs);
    e.known_until_ = known_until;
    e.canonicalize();
    return e;
}

Rational LaurentElem::coeff(long e) const {
    if (e >= known_until_) throw PrecisionExhausted("coefficient beyond precision");
    long idx = e - start_;
    if (coeffs_.empty() || idx < 0 || idx >= static_cast<long>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(idx)];
}

VOrd LaurentElem::vord() const {
    if (!coeffs_.empty()) return VOrd::known(start_);
    if (known_until_ == kExact) return VOrd::infinite();
    return VOrd::at_least(known_until_);
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem e = *this;
    for (auto& c : e.coeffs_) c = -c;
    return e;
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
    long ku = std::min(a.known_until_, b.known_until_);
    if (a.coeffs_.empty() && b.coeffs_.empty())
        return LaurentElem::make(0, {}, ku);
    long lo = std::min(a.ord_lower(), b.ord_lower());
    long hi_a = a.coeffs_.empty() ? lo : a.start_ + static_cast<long>(a.coeffs_.size());
    long hi_b = b.coeffs_.empty() ? lo : b.start_ + static_cast<long>(b.coeffs_.size());
    long hi = std::max(hi_a, hi_b);
    if (ku != LaurentElem::kExact) hi = std::min(hi, ku);
    std::vector<Rational> cs;
    for (long e = lo; e < hi; ++e) {
        Rational ca = (e >= a.ord_lower() && e < hi_a) ? a.coeff(e) : Rational(0);
        Rational cb = (e >= b.ord_lower() && e < hi_b) ? b.coeff(e) : Rational(0);
        cs.push_back(ca + cb);
    }
    return LaurentElem::make(lo, std::move(cs), ku);
}

LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
    long ku = std::min(sat_add(a.known_until_, b.ord_lower()),
                       sat_add(b.known_until_, a.ord_lower()));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentElem::make(0, {}, ku);
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentElem::make(a.start_ + b.start_, std::move(cs), ku);
}

LaurentElem LaurentElem::recip(long exact_rel) const {
    if (coeffs_.empty())
        throw ZeroInput("reciprocal of an element with no known leading coefficient");
    if (exact() && coeffs_.size() == 1) {
        LaurentElem e;
        e.start_ = -start_;
        e.coeffs_ = {Rational(1) / coeffs_[0]};
        return e;
    }
    long rel = exact() ? std::max<long>(exact_rel, 1) : known_until_ - start_;
    std::vector<Rational> r(static_cast<std::size_t>(rel), Rational(0));
    r[0] = Rational(1) / coeffs_[0];
    for (long n = 1; n < rel; ++n) {
        Rational acc(0);
        for (long i = 1; i <= n && i < static_cast<long>(coeffs_.size()); ++i)
            acc += coeffs_[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
        r[static_cast<std::size_t>(n)] = -acc / coeffs_[0];
    }
    return make(-start_, std::move(r), -start_ + rel);
}

TruthValue LaurentElem::is_zero3() const {
    if (!coeffs_.empty()) return TruthValue::False;
    return exact() ? TruthValue::True : TruthValue::Indeterminate;
}

LaurentElem LaurentElem::truncated(long bound) const {
    if (bound >= known_until_) return *this;
    LaurentElem e = *this;
    e.known_until_ = bound;
    e.canonicalize();
    return e;
}

std::string LaurentElem::str() const {
    if (coeffs_.empty()) {
        if (exact()) return "0";
        return "O(t^" + std::to_string(known_until_) + ")";
    }
    std::string inner = to_string(coeffs_[0]);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (is_zero(coeffs_[i])) continue;
        Rational c = coeffs_[i];
        inner += sign(c) < 0 ? " - " : " + ";
        inner += to_string(rat_abs(c)) + "*t";
        if (i > 1) inner += "^" + std::to_string(i);
    }
    std::string out = "t^" + std::to_string(start_) + "*(" + inner + ")";
    if (!exact()) out += " + O(t^" + std::to_string(known_until_) + ")";
    return out;
}

LaurentElem series_sqrt(const LaurentElem& s, int default_precision) {
    if (s.known_zero()) throw ZeroInput("series_sqrt: zero to precision");
    if (s.start() % 2 != 0) throw NoSquareRoot(NoSquareRoot::Reason::OddOrder);
    const Rational& c0 = s.coeffs()[0];
    if (sign(c0) < 0) throw NoSquareRoot(NoSquareRoot::Reason::NonSquareLeadingCoefficient);
    Integer num = c0.get_num(), den = c0.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw NoSquareRoot(NoSquareRoot::Reason::NonSquareLeadingCoefficient);
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r0 = make_rational(rn, rd);

    long rel = s.exact() ? default_precision : s.known_until() - s.start();
    std::vector<Rational> r(static_cast<std::size_t>(rel), Rational(0));
    r[0] = r0;
    for (long n = 1; n < rel; ++n) {
        Rational acc(0);
        for (long i = 1; i < n; ++i)
            acc += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
        Rational sn = s.coeff(s.start() + n);
        r[static_cast<std::size_t>(n)] = (sn - acc) / (Rational(2) * r0);
    }
    long half = s.start() / 2;
    if (s.exact()) {
        // The root of an exact element is exact when it terminates: square
        // the candidate and compare (handles monomials and perfect squares).
        LaurentElem cand = LaurentElem::make(half, r, LaurentElem::kExact);
        if (equal3(cand * cand, s) == TruthValue::True) return cand;
    }
    return LaurentElem::make(half, std::move(r), half + rel);
}

}  // namespace qrc
