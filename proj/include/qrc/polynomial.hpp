#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrc/rational.hpp"

namespace qrc {

// Exponent vector, parallel to the owning polynomial's vars().
using Monomial = std::vector<unsigned>;

// Graded lexicographic order; only monomials of the same length compare.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals, in canonical form:
//  - vars() is sorted, duplicate-free, and minimal (every listed variable
//    occurs in some term),
//  - no stored coefficient is zero,
//  - the zero polynomial has no terms and no variables.
// Canonical form makes operator== structural and cheap.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;  // zero

    static Polynomial constant(const Rational& c);
    static Polynomial integer(long n) { return constant(Rational(n)); }
    static Polynomial variable(const std::string& name);
    static Polynomial from_terms(std::vector<std::string> vars, TermMap terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Value of a constant polynomial (zero included).
    Rational constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool contains_var(const std::string& var) const;

    // Largest exponent of var; 0 if var is absent (zero polynomial included).
    unsigned degree(const std::string& var) const;
    unsigned total_degree() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;
    Polynomial derivative(const std::string& var) const;

    // Coefficients of powers of var, ascending; result[i] does not contain
    // var. Always degree(var)+1 entries (a single entry for the zero
    // polynomial or when var is absent).
    std::vector<Polynomial> coeffs_in(const std::string& var) const;
    // Sum coeffs[i] * var^i. Coefficients must not contain var.
    static Polynomial from_coeffs(const std::vector<Polynomial>& coeffs,
                                  const std::string& var);
    // Leading coefficient viewed in var.
    Polynomial lc_in(const std::string& var) const;

    Polynomial substitute(const std::string& var, const Polynomial& value) const;
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; 0 for the zero polynomial.
    Rational content() const;

    // Exact multivariate division; throws Error when not divisible.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Deterministic total order (for canonical sorting; no algebraic meaning).
    static bool less(const Polynomial& a, const Polynomial& b);

    // Canonical text, graded-lex descending, e.g. "3*x^2*y - 1/2".
    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    // Re-establish canonical form: drop zero terms, trim unused variables.
    void normalize();
    // Rewrite onto a variable superset (new_vars must contain vars_).
    Polynomial on_vars(const std::vector<std::string>& new_vars) const;
    friend std::vector<std::string> merge_vars(const Polynomial& a,
                                               const Polynomial& b);
};

}  // namespace qrc
