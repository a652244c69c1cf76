#include "qrc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qrc/errors.hpp"

namespace qrc {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (!qrc::is_zero(c)) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Monomial{1}, Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, TermMap terms) {
    Polynomial p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Polynomial::contains_var(const std::string& var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

unsigned Polynomial::degree(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [mono, coef] : terms_) d = std::max(d, mono[idx]);
    return d;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [mono, coef] : terms_) {
        unsigned s = 0;
        for (unsigned e : mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (qrc::is_zero(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
    if (terms_.empty()) {
        vars_.clear();
        return;
    }
    // Trim variables that no longer occur in any term.
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [mono, coef] : terms_)
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> new_vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) new_vars.push_back(vars_[i]);
    TermMap new_terms;
    for (const auto& [mono, coef] : terms_) {
        Monomial m;
        m.reserve(new_vars.size());
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (used[i]) m.push_back(mono[i]);
        new_terms.emplace(std::move(m), coef);
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

Polynomial Polynomial::on_vars(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end() || *it != vars_[i])
            throw Error("on_vars: target variable set is not a superset");
        pos[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    Polynomial p;
    p.vars_ = new_vars;
    for (const auto& [mono, coef] : terms_) {
        Monomial m(new_vars.size(), 0);
        for (std::size_t i = 0; i < mono.size(); ++i) m[pos[i]] = mono[i];
        p.terms_.emplace(std::move(m), coef);
    }
    return p;
}

std::vector<std::string> merge_vars(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> out;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                   b.vars_.end(), std::back_inserter(out));
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto vs = merge_vars(a, b);
    Polynomial x = a.on_vars(vs), y = b.on_vars(vs);
    for (const auto& [mono, coef] : y.terms_) {
        auto [it, inserted] = x.terms_.emplace(mono, coef);
        if (!inserted) it->second += coef;
    }
    x.normalize();
    return x;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& [mono, coef] : p.terms_) coef = -coef;
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const auto vs = merge_vars(a, b);
    Polynomial x = a.on_vars(vs), y = b.on_vars(vs);
    Polynomial out;
    out.vars_ = vs;
    for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
            Monomial m(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = out.terms_.emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (qrc::is_zero(c)) return Polynomial();
    Polynomial p(*this);
    for (auto& [mono, coef] : p.terms_) coef *= c;
    return p;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = Polynomial::integer(1), base = *this;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return Polynomial();
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    Polynomial p;
    p.vars_ = vars_;
    for (const auto& [mono, coef] : terms_) {
        if (mono[idx] == 0) continue;
        Monomial m = mono;
        m[idx] -= 1;
        p.terms_.emplace(std::move(m), coef * Rational(mono[idx]));
    }
    p.normalize();
    return p;
}

std::vector<Polynomial> Polynomial::coeffs_in(const std::string& var) const {
    const unsigned d = degree(var);
    std::vector<Polynomial> out(d + 1);
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        out[0] = *this;
        return out;
    }
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [mono, coef] : terms_) {
        Monomial m = mono;
        const unsigned e = m[idx];
        m[idx] = 0;
        Polynomial piece;
        piece.vars_ = vars_;
        piece.terms_.emplace(std::move(m), coef);
        piece.normalize();
        out[e] += piece;
    }
    return out;
}

Polynomial Polynomial::from_coeffs(const std::vector<Polynomial>& coeffs,
                                   const std::string& var) {
    Polynomial x = Polynomial::variable(var);
    Polynomial out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].contains_var(var))
            throw Error("from_coeffs: coefficient contains the main variable");
        out = out * x + coeffs[i];
    }
    return out;
}

Polynomial Polynomial::lc_in(const std::string& var) const {
    auto cs = coeffs_in(var);
    return cs.back();
}

Polynomial Polynomial::substitute(const std::string& var,
                                  const Polynomial& value) const {
    if (!contains_var(var)) return *this;
    const auto cs = coeffs_in(var);
    Polynomial out;
    for (std::size_t i = cs.size(); i-- > 0;) out = out * value + cs[i];
    return out;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw MissingAssignment("eval: no value for variable " + v);
        vals.push_back(it->second);
    }
    Rational acc(0);
    for (const auto& [mono, coef] : terms_) {
        Rational term = coef;
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i]) term *= rat_pow(vals[i], mono[i]);
        acc += term;
    }
    return acc;
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(0);
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [mono, coef] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                coef.get_den().get_mpz_t());
    for (const auto& [mono, coef] : terms_) {
        Integer scaled = coef.get_num() * (den_lcm / coef.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error("divide_exact: division by zero");
    if (divisor.is_constant())
        return scaled(Rational(1) / divisor.constant_value());
    const auto vs = merge_vars(*this, divisor);
    Polynomial r = on_vars(vs), d = divisor.on_vars(vs);
    Polynomial q;
    q.vars_ = vs;
    const auto& [dm, dc] = *d.terms_.rbegin();
    while (!r.terms_.empty()) {
        const auto& [rm, rc] = *r.terms_.rbegin();
        Monomial m(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (rm[i] < dm[i]) throw Error("divide_exact: not divisible");
            m[i] = rm[i] - dm[i];
        }
        Polynomial piece;
        piece.vars_ = vs;
        piece.terms_.emplace(std::move(m), rc / dc);
        q += piece;
        r = r - piece * d;
        if (!r.terms_.empty() && r.vars_ != vs) r = r.on_vars(vs);
    }
    q.normalize();
    return q;
}

bool Polynomial::less(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first)
            return GrlexLess{}(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coef] = *it;
        const bool neg = sign(coef) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Rational a = rat_abs(coef);
        bool has_factor = false;
        for (unsigned e : mono)
            if (e) has_factor = true;
        if (!has_factor) {
            os << to_string(a);
            continue;
        }
        bool star = false;
        if (a != 1) {
            os << to_string(a);
            star = true;
        }
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (mono[i] >= 2) os << "^" << mono[i];
            star = true;
        }
    }
    return os.str();
}

}  // namespace qrc
