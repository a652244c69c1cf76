#include "qrc/normalize.hpp"

#include <map>

#include "qrc/errors.hpp"

namespace qrc {
namespace {

// By totality of both quasi-orders, the negation of a weak atom is the
// reversed strict atom and vice versa.
FormulaPtr expand_atom(Rel r, const TermPtr& t1, const TermPtr& t2, bool pos) {
    if (pos) {
        switch (r) {
            case Rel::Eq:
            case Rel::Neq:
            case Rel::Le:
            case Rel::Lt:
            case Rel::LeV:
            case Rel::LtV:
                return f_atom(r, t1, t2);
            case Rel::Sim:
                return f_and(f_atom(Rel::Le, t1, t2), f_atom(Rel::Le, t2, t1));
            case Rel::SimV:
                return f_and(f_atom(Rel::LeV, t1, t2), f_atom(Rel::LeV, t2, t1));
        }
    } else {
        switch (r) {
            case Rel::Eq: return f_atom(Rel::Neq, t1, t2);
            case Rel::Neq: return f_atom(Rel::Eq, t1, t2);
            case Rel::Le: return f_atom(Rel::Lt, t2, t1);
            case Rel::Lt: return f_atom(Rel::Le, t2, t1);
            case Rel::LeV: return f_atom(Rel::LtV, t2, t1);
            case Rel::LtV: return f_atom(Rel::LeV, t2, t1);
            case Rel::Sim:
                return f_or(f_atom(Rel::Lt, t2, t1), f_atom(Rel::Lt, t1, t2));
            case Rel::SimV:
                return f_or(f_atom(Rel::LtV, t2, t1), f_atom(Rel::LtV, t1, t2));
        }
    }
    throw Error("expand_atom: bad relation");
}

FormulaPtr to_nnf(const FormulaPtr& f, bool pos) {
    switch (f->kind) {
        case FKind::Atom:
            return expand_atom(f->rel, f->t1, f->t2, pos);
        case FKind::Not:
            return to_nnf(f->a, !pos);
        case FKind::And: {
            FormulaPtr a = to_nnf(f->a, pos), b = to_nnf(f->b, pos);
            return pos ? f_and(a, b) : f_or(a, b);
        }
        case FKind::Or: {
            FormulaPtr a = to_nnf(f->a, pos), b = to_nnf(f->b, pos);
            return pos ? f_or(a, b) : f_and(a, b);
        }
        case FKind::Implies:
            return pos ? f_or(to_nnf(f->a, false), to_nnf(f->b, true))
                       : f_and(to_nnf(f->a, true), to_nnf(f->b, false));
        case FKind::Iff:
            return pos ? f_and(f_or(to_nnf(f->a, false), to_nnf(f->b, true)),
                               f_or(to_nnf(f->b, false), to_nnf(f->a, true)))
                       : f_or(f_and(to_nnf(f->a, true), to_nnf(f->b, false)),
                              f_and(to_nnf(f->b, true), to_nnf(f->a, false)));
        case FKind::Exists: {
            FormulaPtr body = to_nnf(f->a, pos);
            return pos ? f_exists(f->var, body) : f_forall(f->var, body);
        }
        case FKind::Forall: {
            FormulaPtr body = to_nnf(f->a, pos);
            return pos ? f_forall(f->var, body) : f_exists(f->var, body);
        }
    }
    throw Error("to_nnf: bad kind");
}

TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& env) {
    switch (t->kind) {
        case TermKind::Constant: return t;
        case TermKind::Variable: {
            auto it = env.find(t->name);
            return it == env.end() ? t : Term::variable(it->second);
        }
        case TermKind::Neg: return Term::neg(rename_term(t->lhs, env));
        case TermKind::Add: return Term::add(rename_term(t->lhs, env), rename_term(t->rhs, env));
        case TermKind::Mul: return Term::mul(rename_term(t->lhs, env), rename_term(t->rhs, env));
    }
    throw Error("rename_term: bad kind");
}

struct Renamer {
    const std::set<std::string>& avoid;
    unsigned long k = 0;
    std::map<std::string, std::string> env;

    std::string fresh() {
        for (;;) {
            std::string n = "var$" + std::to_string(k++);
            if (!avoid.count(n)) return n;
        }
    }

    FormulaPtr walk(const FormulaPtr& f) {
        switch (f->kind) {
            case FKind::Atom:
                return f_atom(f->rel, rename_term(f->t1, env), rename_term(f->t2, env));
            case FKind::Not:
                return f_not(walk(f->a));
            case FKind::And: {
                FormulaPtr a = walk(f->a);
                return f_and(a, walk(f->b));
            }
            case FKind::Or: {
                FormulaPtr a = walk(f->a);
                return f_or(a, walk(f->b));
            }
            case FKind::Implies: {
                FormulaPtr a = walk(f->a);
                return f_implies(a, walk(f->b));
            }
            case FKind::Iff: {
                FormulaPtr a = walk(f->a);
                return f_iff(a, walk(f->b));
            }
            case FKind::Exists:
            case FKind::Forall: {
                std::string n = fresh();
                auto it = env.find(f->var);
                bool had = it != env.end();
                std::string old = had ? it->second : "";
                env[f->var] = n;
                FormulaPtr body = walk(f->a);
                if (had) env[f->var] = old;
                else env.erase(f->var);
                return f->kind == FKind::Exists ? f_exists(n, body) : f_forall(n, body);
            }
        }
        throw Error("rename: bad kind");
    }
};

}  // namespace

FormulaPtr normalize(const FormulaPtr& f) {
    FormulaPtr nnf = to_nnf(f, true);
    std::set<std::string> fv = free_vars(nnf);
    Renamer r{fv, 0, {}};
    return r.walk(nnf);
}

}  // namespace qrc
