#include "qrc/formula.hpp"

#include "qrc/errors.hpp"

namespace qrc {

std::string rel_token(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Neq: return "!=";
        case Rel::Le: return "<=";
        case Rel::Lt: return "<";
        case Rel::Sim: return "~";
        case Rel::LeV: return "<=v";
        case Rel::LtV: return "<v";
        case Rel::SimV: return "~v";
    }
    return "?";
}

FormulaPtr f_atom(Rel r, TermPtr t1, TermPtr t2) {
    auto f = std::make_shared<Formula>();
    f->kind = FKind::Atom;
    f->rel = r;
    f->t1 = std::move(t1);
    f->t2 = std::move(t2);
    return f;
}

static FormulaPtr node(FKind k, FormulaPtr a, FormulaPtr b = nullptr) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

FormulaPtr f_not(FormulaPtr f) { return node(FKind::Not, std::move(f)); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return node(FKind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return node(FKind::Or, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return node(FKind::Implies, std::move(a), std::move(b)); }
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) { return node(FKind::Iff, std::move(a), std::move(b)); }

static FormulaPtr quant(FKind k, const std::string& var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = var;
    f->a = std::move(body);
    return f;
}

FormulaPtr f_exists(const std::string& var, FormulaPtr body) { return quant(FKind::Exists, var, std::move(body)); }
FormulaPtr f_forall(const std::string& var, FormulaPtr body) { return quant(FKind::Forall, var, std::move(body)); }

FormulaPtr f_true() { return f_atom(Rel::Eq, Term::constant(0), Term::constant(0)); }
FormulaPtr f_false() { return f_atom(Rel::Neq, Term::constant(0), Term::constant(0)); }

static bool is_zero_const(const TermPtr& t) {
    return t && t->kind == TermKind::Constant && t->value == 0;
}
bool is_true_const(const FormulaPtr& f) {
    return f && f->kind == FKind::Atom && f->rel == Rel::Eq && is_zero_const(f->t1) &&
           is_zero_const(f->t2);
}
bool is_false_const(const FormulaPtr& f) {
    return f && f->kind == FKind::Atom && f->rel == Rel::Neq && is_zero_const(f->t1) &&
           is_zero_const(f->t2);
}

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_true();
    FormulaPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
    return acc;
}

FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_false();
    FormulaPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_or(acc, fs[i]);
    return acc;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case FKind::Atom:
            return a->rel == b->rel && term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
        case FKind::Not:
            return formula_equal(a->a, b->a);
        case FKind::And:
        case FKind::Or:
        case FKind::Implies:
        case FKind::Iff:
            return formula_equal(a->a, b->a) && formula_equal(a->b, b->b);
        case FKind::Exists:
        case FKind::Forall:
            return a->var == b->var && formula_equal(a->a, b->a);
    }
    return false;
}

// Three-way comparators; the orderings are arbitrary but deterministic.
static int term_cmp(const TermPtr& a, const TermPtr& b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    switch (a->kind) {
        case TermKind::Constant:
            return cmp(a->value, b->value) < 0 ? -1 : (a->value == b->value ? 0 : 1);
        case TermKind::Variable:
            return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
        case TermKind::Neg:
            return term_cmp(a->lhs, b->lhs);
        case TermKind::Add:
        case TermKind::Mul: {
            int c = term_cmp(a->lhs, b->lhs);
            return c != 0 ? c : term_cmp(a->rhs, b->rhs);
        }
    }
    return 0;
}

bool term_less(const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) < 0; }

static int formula_cmp(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    switch (a->kind) {
        case FKind::Atom: {
            if (a->rel != b->rel) return a->rel < b->rel ? -1 : 1;
            int c = term_cmp(a->t1, b->t1);
            return c != 0 ? c : term_cmp(a->t2, b->t2);
        }
        case FKind::Not:
            return formula_cmp(a->a, b->a);
        case FKind::And:
        case FKind::Or:
        case FKind::Implies:
        case FKind::Iff: {
            int c = formula_cmp(a->a, b->a);
            return c != 0 ? c : formula_cmp(a->b, b->b);
        }
        case FKind::Exists:
        case FKind::Forall: {
            int c = a->var.compare(b->var);
            if (c != 0) return c < 0 ? -1 : 1;
            return formula_cmp(a->a, b->a);
        }
    }
    return 0;
}

bool formula_less(const FormulaPtr& a, const FormulaPtr& b) { return formula_cmp(a, b) < 0; }

static void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                          std::set<std::string>& out) {
    if (!f) return;
    switch (f->kind) {
        case FKind::Atom: {
            std::set<std::string> tv;
            term_free_vars(f->t1, tv);
            term_free_vars(f->t2, tv);
            for (const auto& v : tv)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case FKind::Not:
            free_vars_rec(f->a, bound, out);
            return;
        case FKind::And:
        case FKind::Or:
        case FKind::Implies:
        case FKind::Iff:
            free_vars_rec(f->a, bound, out);
            free_vars_rec(f->b, bound, out);
            return;
        case FKind::Exists:
        case FKind::Forall: {
            bool fresh = bound.insert(f->var).second;
            free_vars_rec(f->a, bound, out);
            if (fresh) bound.erase(f->var);
            return;
        }
    }
}

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

bool is_quantifier_free(const FormulaPtr& f) {
    if (!f) return true;
    switch (f->kind) {
        case FKind::Atom: return true;
        case FKind::Not: return is_quantifier_free(f->a);
        case FKind::And:
        case FKind::Or:
        case FKind::Implies:
        case FKind::Iff:
            return is_quantifier_free(f->a) && is_quantifier_free(f->b);
        case FKind::Exists:
        case FKind::Forall:
            return false;
    }
    return true;
}

// Order atoms (>=, >) are primitivized by their positive content: they only
// occur on the field-ordering branch, where every completion has
// characteristic zero.  Equations and inequations may be multiplied by -1 (a
// unit everywhere) to fix the leading sign, but never rescaled by content:
// dividing an equation by n is not an equivalence when the residue
// characteristic divides n.
OrderAtom make_order_atom(Polynomial p, OrderAtom::Sigma sigma) {
    if (!p.is_zero()) {
        if (sigma == OrderAtom::Sigma::EqZero || sigma == OrderAtom::Sigma::NeqZero) {
            if (sign(p.terms().rbegin()->second) < 0) p = -p;
        } else {
            Rational c = p.content();
            p = p.scaled(Rational(1) / c);
        }
    }
    return OrderAtom{std::move(p), sigma};
}

NormalizedAtom to_normalized_atom(const FormulaPtr& f) {
    if (!f || f->kind != FKind::Atom) throw Error("to_normalized_atom: not an atom");
    Polynomial p1 = term_to_poly(f->t1);
    Polynomial p2 = term_to_poly(f->t2);
    switch (f->rel) {
        case Rel::Eq: return make_order_atom(p2 - p1, OrderAtom::Sigma::EqZero);
        case Rel::Neq: return make_order_atom(p2 - p1, OrderAtom::Sigma::NeqZero);
        case Rel::Le: return make_order_atom(p2 - p1, OrderAtom::Sigma::GeqZero);
        case Rel::Lt: return make_order_atom(p2 - p1, OrderAtom::Sigma::GtZero);
        case Rel::LeV: return ValueAtom{p2, p1, ValueAtom::Rho::Le};
        case Rel::LtV: return ValueAtom{p2, p1, ValueAtom::Rho::Lt};
        case Rel::SimV: return ValueAtom{p1, p2, ValueAtom::Rho::Eq};
        case Rel::Sim:
            throw Error("to_normalized_atom: ~ is a conjunction after normalization");
    }
    throw Error("to_normalized_atom: bad relation");
}

FormulaPtr atom_to_formula(const NormalizedAtom& a) {
    if (std::holds_alternative<OrderAtom>(a)) {
        const auto& oa = std::get<OrderAtom>(a);
        TermPtr pt = poly_to_term(oa.p);
        switch (oa.sigma) {
            case OrderAtom::Sigma::EqZero: return f_atom(Rel::Eq, pt, Term::constant(0));
            case OrderAtom::Sigma::NeqZero: return f_atom(Rel::Neq, pt, Term::constant(0));
            case OrderAtom::Sigma::GeqZero: return f_atom(Rel::Le, Term::constant(0), pt);
            case OrderAtom::Sigma::GtZero: return f_atom(Rel::Lt, Term::constant(0), pt);
        }
    }
    const auto& va = std::get<ValueAtom>(a);
    TermPtr pt = poly_to_term(va.p);
    TermPtr qt = poly_to_term(va.q);
    switch (va.rho) {
        case ValueAtom::Rho::Le: return f_atom(Rel::LeV, qt, pt);  // v(p) <= v(q)
        case ValueAtom::Rho::Lt: return f_atom(Rel::LtV, qt, pt);
        case ValueAtom::Rho::Eq: return f_atom(Rel::SimV, pt, qt);
    }
    throw Error("atom_to_formula: bad atom");
}

}  // namespace qrc
