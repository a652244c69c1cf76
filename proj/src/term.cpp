#include "qrc/term.hpp"

#include "qrc/errors.hpp"

namespace qrc {

TermPtr Term::constant(const Integer& v) {
    if (v < 0) return neg(constant(Integer(-v)));
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Constant;
    t->value = v;
    return t;
}

TermPtr Term::variable(const std::string& n) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Variable;
    t->name = n;
    return t;
}

static TermPtr binary(TermKind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

TermPtr Term::add(TermPtr a, TermPtr b) { return binary(TermKind::Add, std::move(a), std::move(b)); }
TermPtr Term::mul(TermPtr a, TermPtr b) { return binary(TermKind::Mul, std::move(a), std::move(b)); }

TermPtr Term::neg(TermPtr a) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Neg;
    t->lhs = std::move(a);
    return t;
}

TermPtr Term::sub(TermPtr a, TermPtr b) { return add(std::move(a), neg(std::move(b))); }

TermPtr Term::pow(TermPtr base, unsigned long e) {
    if (e == 0) return constant(1);
    TermPtr acc = base;
    for (unsigned long i = 1; i < e; ++i) acc = mul(acc, base);
    return acc;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Constant: return a->value == b->value;
        case TermKind::Variable: return a->name == b->name;
        case TermKind::Neg: return term_equal(a->lhs, b->lhs);
        case TermKind::Add:
        case TermKind::Mul:
            return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
    return false;
}

void term_free_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    switch (t->kind) {
        case TermKind::Constant: return;
        case TermKind::Variable: out.insert(t->name); return;
        case TermKind::Neg: term_free_vars(t->lhs, out); return;
        case TermKind::Add:
        case TermKind::Mul:
            term_free_vars(t->lhs, out);
            term_free_vars(t->rhs, out);
            return;
    }
}

Polynomial term_to_poly(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Constant: return Polynomial::constant(Rational(t->value));
        case TermKind::Variable: return Polynomial::variable(t->name);
        case TermKind::Neg: return -term_to_poly(t->lhs);
        case TermKind::Add: return term_to_poly(t->lhs) + term_to_poly(t->rhs);
        case TermKind::Mul: return term_to_poly(t->lhs) * term_to_poly(t->rhs);
    }
    throw Error("term_to_poly: bad kind");
}

// Rebuild a term from a polynomial with integer coefficients, in the same
// graded-lex descending monomial order the canonical text form uses. The
// pipeline never divides coefficients, so the precondition holds for every
// polynomial that reaches printing.
TermPtr poly_to_term(const Polynomial& p) {
    if (p.is_zero()) return Term::constant(0);
    const auto& vars = p.vars();
    TermPtr acc;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        if (c.get_den() != 1)
            throw Error("poly_to_term: non-integer coefficient " + to_string(c));
        Integer ci = c.get_num();
        bool negc = ci < 0;
        Integer mag = negc ? Integer(-ci) : ci;

        TermPtr mono;  // product of variable powers, absent for the constant monomial
        for (std::size_t i = 0; i < vars.size(); ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            TermPtr f = Term::pow(Term::variable(vars[i]), e);
            mono = mono ? Term::mul(mono, f) : f;
        }
        TermPtr piece;
        if (!mono) piece = Term::constant(mag);
        else if (mag == 1) piece = mono;
        else piece = Term::mul(Term::constant(mag), mono);
        if (negc) piece = Term::neg(piece);
        acc = acc ? Term::add(acc, piece) : piece;
    }
    return acc;
}

}  // namespace qrc
