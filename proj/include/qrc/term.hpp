#pragma once

#include <memory>
#include <set>
#include <string>

#include "qrc/polynomial.hpp"
#include "qrc/rational.hpp"

namespace qrc {

// Immutable term tree over the field language: constants are generated from
// 0, 1 and closure under +, *, unary -; there is no division and no power
// node (surface x^k is parsed into a left-nested product). Constant values
// are kept non-negative; negative literals are Neg(Constant).
enum class TermKind { Constant, Variable, Add, Mul, Neg };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    Integer value;      // Constant
    std::string name;   // Variable
    TermPtr lhs, rhs;   // Add/Mul children; Neg uses lhs only

    static TermPtr constant(const Integer& v);
    static TermPtr variable(const std::string& n);
    static TermPtr add(TermPtr a, TermPtr b);
    static TermPtr sub(TermPtr a, TermPtr b);  // sugar: Add(a, Neg(b))
    static TermPtr mul(TermPtr a, TermPtr b);
    static TermPtr neg(TermPtr a);
    static TermPtr pow(TermPtr base, unsigned long e);  // left-nested Mul chain
};

bool term_equal(const TermPtr& a, const TermPtr& b);
void term_free_vars(const TermPtr& t, std::set<std::string>& out);

Polynomial term_to_poly(const TermPtr& t);
// Inverse direction for printing; requires integer coefficients.
TermPtr poly_to_term(const Polynomial& p);

}  // namespace qrc
