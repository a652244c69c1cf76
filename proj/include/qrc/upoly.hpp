#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/rational.hpp"

namespace qrc {

// Dense univariate polynomial over a field F. F must provide +,-,*,/, ==,
// and construction from long. Coefficients ascending; no trailing zeros, so
// the zero polynomial has an empty coefficient vector.
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const F& value) { return UPoly(std::vector<F>{value}); }
    static UPoly x() { return UPoly(std::vector<F>{F(0), F(1)}); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

    const F& lc() const {
        if (c_.empty()) throw ZeroPolynomial("lc of zero polynomial");
        return c_.back();
    }

    // Index of the lowest nonzero coefficient (t-adic order of a power
    // series polynomial). Throws on zero input.
    std::size_t ord() const {
        if (c_.empty()) throw ZeroPolynomial("ord of zero polynomial");
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == F(0))) return i;
        throw ZeroPolynomial("ord of zero polynomial");
    }
    const F& trailing() const { return c_[ord()]; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return UPoly(std::move(out));
    }
    UPoly operator-() const {
        std::vector<F> out = c_;
        for (auto& v : out) v = -v;
        return UPoly(std::move(out));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(out));
    }
    UPoly scaled(const F& k) const {
        std::vector<F> out = c_;
        for (auto& v : out) v = v * k;
        return UPoly(std::move(out));
    }
    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<F> out(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            out[i - 1] = c_[i] * F(static_cast<long>(i));
        return UPoly(std::move(out));
    }

    F eval(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Euclidean division (field coefficients): *this = q * d + r, deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
        UPoly r = *this;
        std::vector<F> q(std::max<std::size_t>(
                             c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0),
                         F(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift =
                static_cast<std::size_t>(r.degree() - d.degree());
            const F k = r.lc() / d.lc();
            q[shift] = q[shift] + k;
            std::vector<F> sub(shift, F(0));
            sub.insert(sub.end(), d.c_.begin(), d.c_.end());
            UPoly s{std::move(sub)};
            r = r - s.scaled(k);
        }
        return {UPoly(std::move(q)), r};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly div_exact(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw Error("div_exact: nonzero remainder");
        return q;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / lc());
    }

    std::string str(const std::string& var) const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == F(0)) continue;
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c_[i]) + ")";
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<F> c_;

    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        UPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace qrc
