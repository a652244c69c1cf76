#include "qrc/printer.hpp"

#include "qrc/errors.hpp"

namespace qrc {

// Terms print with spaced sums and compact products: `x + 2*y`, `x - 1`,
// `-x*y`. Only the left spine of Add/Mul chains is flattened, so the
// left-associative parse reproduces the tree exactly.

static std::string render_mulnd(const TermPtr& t);

static std::string render_factor(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Constant: return t->value.get_str();
        case TermKind::Variable: return t->name;
        default: return "(" + render_term(t) + ")";
    }
}

static std::string render_mulnd(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Constant: return t->value.get_str();
        case TermKind::Variable: return t->name;
        case TermKind::Mul: {
            std::vector<TermPtr> factors;
            TermPtr cur = t;
            while (cur->kind == TermKind::Mul) {
                factors.push_back(cur->rhs);
                cur = cur->lhs;
            }
            factors.push_back(cur);
            std::string out;
            for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
                if (!out.empty()) out += "*";
                out += render_factor(*it);
            }
            return out;
        }
        default: return "(" + render_term(t) + ")";
    }
}

std::string render_term(const TermPtr& t) {
    std::vector<TermPtr> addends;
    TermPtr cur = t;
    while (cur->kind == TermKind::Add) {
        addends.push_back(cur->rhs);
        cur = cur->lhs;
    }
    addends.push_back(cur);
    std::string out;
    for (auto it = addends.rbegin(); it != addends.rend(); ++it) {
        const TermPtr& piece = *it;
        bool first = out.empty();
        if (piece->kind == TermKind::Neg) {
            out += first ? "-" : " - ";
            out += render_mulnd(piece->lhs);
        } else {
            if (!first) out += " + ";
            out += render_mulnd(piece);
        }
    }
    return out;
}

// Formula layout. `wrapped` records that the formula sits directly inside
// parentheses, which lets an implication hand its quantified right-hand side
// to the enclosing group instead of adding another layer.
static std::string render_f(const FormulaPtr& f, bool wrapped);

static bool is_quant(const FormulaPtr& f) {
    return f->kind == FKind::Exists || f->kind == FKind::Forall;
}

static std::string paren(const FormulaPtr& f) { return "(" + render_f(f, true) + ")"; }

static std::string render_f(const FormulaPtr& f, bool wrapped) {
    switch (f->kind) {
        case FKind::Atom:
            return render_term(f->t1) + " " + rel_token(f->rel) + " " + render_term(f->t2);
        case FKind::Not:
            return "!" + paren(f->a);
        case FKind::And: {
            bool lb = f->a->kind == FKind::And || f->a->kind == FKind::Not ||
                      f->a->kind == FKind::Atom;
            bool rb = f->b->kind == FKind::Not || f->b->kind == FKind::Atom;
            return (lb ? render_f(f->a, false) : paren(f->a)) + " & " +
                   (rb ? render_f(f->b, false) : paren(f->b));
        }
        case FKind::Or: {
            bool lb = f->a->kind == FKind::Or || f->a->kind == FKind::And ||
                      f->a->kind == FKind::Not || f->a->kind == FKind::Atom;
            bool rb = f->b->kind == FKind::And || f->b->kind == FKind::Not ||
                      f->b->kind == FKind::Atom;
            return (lb ? render_f(f->a, false) : paren(f->a)) + " | " +
                   (rb ? render_f(f->b, false) : paren(f->b));
        }
        case FKind::Implies:
        case FKind::Iff: {
            bool lb = f->a->kind == FKind::Atom || f->a->kind == FKind::Not;
            std::string out = lb ? render_f(f->a, false) : paren(f->a);
            out += f->kind == FKind::Implies ? " -> " : " <-> ";
            if (f->b->kind == FKind::Implies || f->b->kind == FKind::Iff)
                out += render_f(f->b, wrapped);  // right-associative chain
            else if (is_quant(f->b))
                out += wrapped ? render_f(f->b, true) : paren(f->b);
            else
                out += render_f(f->b, false);
            return out;
        }
        case FKind::Exists:
        case FKind::Forall: {
            std::string out = (f->kind == FKind::Exists ? "E " : "A ") + f->var + ". ";
            const FormulaPtr& body = f->a;
            bool wrap_body =
                body->kind == FKind::Iff ||
                ((body->kind == FKind::Implies || body->kind == FKind::Iff) &&
                 is_quant(body->b));
            if (wrap_body) out += paren(body);
            else out += render_f(body, wrapped);
            return out;
        }
    }
    throw Error("render: bad formula kind");
}

std::string render(const FormulaPtr& f) { return render_f(f, false); }

}  // namespace qrc
