#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qrc/term.hpp"

namespace qrc {

// Surface relations. Le/Lt/Sim are the order family (<=, <, ~); LeV/LtV/SimV
// the value family (<=v, <v, ~v). `a <=v b` states v(b) <= v(a): smaller
// elements in the value quasi-order are those of larger valuation.
enum class Rel { Eq, Neq, Le, Lt, Sim, LeV, LtV, SimV };

std::string rel_token(Rel r);

enum class FKind { Atom, Not, And, Or, Implies, Iff, Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FKind kind;
    Rel rel = Rel::Eq;  // Atom
    TermPtr t1, t2;     // Atom
    FormulaPtr a, b;    // children; Not uses a; quantifiers use a
    std::string var;    // quantifier-bound name
};

FormulaPtr f_atom(Rel r, TermPtr t1, TermPtr t2);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(const std::string& var, FormulaPtr body);
FormulaPtr f_forall(const std::string& var, FormulaPtr body);

// Canonical truth constants: 0 = 0 and 0 != 0.
FormulaPtr f_true();
FormulaPtr f_false();
bool is_true_const(const FormulaPtr& f);
bool is_false_const(const FormulaPtr& f);

// Conjunction/disjunction over a list; empty list folds to true/false.
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
// Deterministic total order for canonical sorting and deduplication.
bool term_less(const TermPtr& a, const TermPtr& b);
bool formula_less(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const FormulaPtr& f);
bool is_quantifier_free(const FormulaPtr& f);

// Atoms of normalized formulas, recast over polynomials.
// OrderAtom(p, sigma) holds when p sigma 0; t1 <= t2 becomes (t2 - t1) >= 0.
// ValueAtom(p, q, rho) compares valuations; t1 <=v t2 becomes v(t2) <= v(t1).
struct OrderAtom {
    enum class Sigma { EqZero, NeqZero, GeqZero, GtZero };
    Polynomial p;
    Sigma sigma;
};
struct ValueAtom {
    enum class Rho { Le, Lt, Eq };  // v(p) <= v(q), v(p) < v(q), v(p) = v(q)
    Polynomial p, q;
    Rho rho;
};
using NormalizedAtom = std::variant<OrderAtom, ValueAtom>;

// Conversion for atoms in the normalized alphabet {=, !=, <=, <, <=v, <v}
// plus the symmetric ~, ~v (mapped to Eq-shaped atoms). Throws Error on
// non-atoms.
NormalizedAtom to_normalized_atom(const FormulaPtr& atom);
FormulaPtr atom_to_formula(const NormalizedAtom& a);

// Polynomials with integer coefficients only; positive-multiple rescaling is
// applied to order atoms (sign-safe), never to value atoms (it would shift
// valuations in mixed-characteristic models).
OrderAtom make_order_atom(Polynomial p, OrderAtom::Sigma sigma);

}  // namespace qrc
