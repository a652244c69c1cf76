// Deciding sentences: eliminate quantifiers for the configured branch, then
// evaluate the ground result in the chosen completion.
//
// Ground semantics per completion (branch, characteristic, residue char):
//   (RCVF, 0, 0)  rational order; nonzero constants all have value 0.
//   (ACVF, 0, 0)  same trivial value on the ground field.
//   (ACVF, 0, p)  the p-adic order on rationals.
//   (ACVF, p, p)  constants reduce mod p; the value of a nonzero residue
//                 is 0 and of a zero residue is infinite.

#include <string>

#include "qrc/errors.hpp"
#include "qrc/qe.hpp"
#include "qrc/rational.hpp"
#include "qrc/term.hpp"

namespace qrc {

namespace {

Rational eval_ground_term(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Constant: return Rational(t->value);
        case TermKind::Variable:
            throw Error("free variable '" + t->name + "' in a ground term");
        case TermKind::Add: return eval_ground_term(t->lhs) + eval_ground_term(t->rhs);
        case TermKind::Mul: return eval_ground_term(t->lhs) * eval_ground_term(t->rhs);
        case TermKind::Neg: return -eval_ground_term(t->lhs);
    }
    throw Error("unreachable term kind");
}

// Order of p in an integer; the caller screens out zero.
long padic_ord(Integer n, const Integer& p) {
    long k = 0;
    n = abs(n);
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

// Valuation encoded as (finite, order): infinite compares above everything.
struct GroundVal {
    bool finite = true;
    long ord = 0;
};

bool val_le(const GroundVal& x, const GroundVal& y) {
    if (!x.finite) return !y.finite;
    if (!y.finite) return true;
    return x.ord <= y.ord;
}

class GroundEvaluator {
 public:
    explicit GroundEvaluator(const CompletionConfig& cc) : cc_(cc) {}

    bool eval(const FormulaPtr& f) const {
        switch (f->kind) {
            case FKind::Atom: return atom(f);
            case FKind::Not: return !eval(f->a);
            case FKind::And: return eval(f->a) && eval(f->b);
            case FKind::Or: return eval(f->a) || eval(f->b);
            case FKind::Implies: return !eval(f->a) || eval(f->b);
            case FKind::Iff: return eval(f->a) == eval(f->b);
            case FKind::Exists:
            case FKind::Forall:
                throw Error("quantifier survived elimination in a sentence");
        }
        throw Error("unreachable formula kind");
    }

 private:
    CompletionConfig cc_;

    bool positive_char() const { return cc_.characteristic != 0; }

    // Is the constant zero in the completion's ground field?
    bool is_ground_zero(const Rational& r) const {
        if (!positive_char()) return qrc::sign(r) == 0;
        const Integer p(cc_.characteristic);
        if (r.get_den() % p == 0) {
            throw Error("denominator divisible by the characteristic");
        }
        return r.get_num() % p == 0;
    }

    GroundVal value_of(const Rational& r) const {
        if (is_ground_zero(r)) return {false, 0};
        if (cc_.characteristic == 0 && cc_.residue_characteristic != 0) {
            const Integer p(cc_.residue_characteristic);
            return {true, padic_ord(r.get_num(), p) - padic_ord(r.get_den(), p)};
        }
        return {true, 0};
    }

    bool atom(const FormulaPtr& f) const {
        const Rational a = eval_ground_term(f->t1);
        const Rational b = eval_ground_term(f->t2);
        switch (f->rel) {
            case Rel::Eq: return is_ground_zero(a - b);
            case Rel::Neq: return !is_ground_zero(a - b);
            case Rel::Le:
            case Rel::Lt:
            case Rel::Sim:
                break;  // handled below, branch-dependently
            case Rel::LeV: return val_le(value_of(b), value_of(a));
            case Rel::LtV: return !val_le(value_of(a), value_of(b));
            case Rel::SimV:
                return val_le(value_of(a), value_of(b)) && val_le(value_of(b), value_of(a));
        }
        if (cc_.branch == Branch::RCVF) {
            const int c = qrc::sign(a - b);
            if (f->rel == Rel::Le) return c <= 0;
            if (f->rel == Rel::Lt) return c < 0;
            return c == 0;  // ~ on an ordered field is equality of order class
        }
        // Valued branch: the quasi-order is the valuation divisibility.
        if (f->rel == Rel::Le) return val_le(value_of(b), value_of(a));
        if (f->rel == Rel::Lt) return !val_le(value_of(a), value_of(b));
        return val_le(value_of(a), value_of(b)) && val_le(value_of(b), value_of(a));
    }
};

}  // namespace

bool decide_sentence(const FormulaPtr& s, const CompletionConfig& cc,
                     const EliminationConfig& cfg) {
    validate_completion(cc);
    if (!free_vars(s).empty()) {
        throw NotASentence("the formula has free variables");
    }
    const FormulaPtr ground = eliminate(s, cc.branch, cfg);
    return GroundEvaluator(cc).eval(ground);
}

}  // namespace qrc
