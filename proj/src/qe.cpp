// Quantifier-elimination driver: normalization, branch-specific atom
// merging, innermost-first elimination with DNF dispatch into the three
// one-variable fragment solvers, and quantifier-free simplification.

#include "qrc/qe.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/normalize.hpp"
#include "qe_detail.hpp"

namespace qrc {

using qe_detail::atom_count;
using qe_detail::eliminate_fragment_a;
using qe_detail::eliminate_fragment_b;
using qe_detail::eliminate_fragment_c;
using qe_detail::fold_and;
using qe_detail::fold_and_all;
using qe_detail::fold_or;
using qe_detail::fold_or_all;
using qe_detail::order_formula;
using qe_detail::value_formula;

namespace {

// On the valued branch the quasi-order collapses into the valuation
// divisibility, so field-order atoms are read as valuation atoms.
FormulaPtr merge_order_into_valuation(const FormulaPtr& f) {
    if (!f) return f;
    if (f->kind == FKind::Atom) {
        if (f->rel == Rel::Le) return f_atom(Rel::LeV, f->t1, f->t2);
        if (f->rel == Rel::Lt) return f_atom(Rel::LtV, f->t1, f->t2);
        if (f->rel == Rel::Sim) return f_atom(Rel::SimV, f->t1, f->t2);
        return f;
    }
    auto g = std::make_shared<Formula>(*f);
    if (f->a) g->a = merge_order_into_valuation(f->a);
    if (f->b) g->b = merge_order_into_valuation(f->b);
    return g;
}

// Canonical rebuild of one positive atom; folds ground cases.
FormulaPtr canon_atom(Branch b, const FormulaPtr& f) {
    if (f->rel == Rel::Sim) {  // defensive: normalize() expands these
        return fold_and(canon_atom(b, f_atom(Rel::Le, f->t1, f->t2)),
                        canon_atom(b, f_atom(Rel::Le, f->t2, f->t1)));
    }
    if (f->rel == Rel::SimV) {
        const NormalizedAtom na = to_normalized_atom(f);
        const auto& va = std::get<ValueAtom>(na);
        return value_formula(va.p, va.q, va.rho);
    }
    FormulaPtr g = f;
    if (b == Branch::ACVF) g = merge_order_into_valuation(f);
    const NormalizedAtom na = to_normalized_atom(g);
    if (const auto* oa = std::get_if<OrderAtom>(&na)) {
        return order_formula(oa->p, oa->sigma);
    }
    const auto& va = std::get<ValueAtom>(na);
    return value_formula(va.p, va.q, va.rho);
}

// The pointwise complement of a canonical atom, used to spot contradictory
// conjunctions and tautological disjunctions.
FormulaPtr complement_atom(Branch b, const FormulaPtr& f) {
    switch (f->rel) {
        case Rel::Eq: return canon_atom(b, f_atom(Rel::Neq, f->t1, f->t2));
        case Rel::Neq: return canon_atom(b, f_atom(Rel::Eq, f->t1, f->t2));
        case Rel::Le: return canon_atom(b, f_atom(Rel::Lt, f->t2, f->t1));
        case Rel::Lt: return canon_atom(b, f_atom(Rel::Le, f->t2, f->t1));
        case Rel::LeV: return canon_atom(b, f_atom(Rel::LtV, f->t2, f->t1));
        case Rel::LtV: return canon_atom(b, f_atom(Rel::LeV, f->t2, f->t1));
        default: return nullptr;  // ~ and ~v have no single-atom complement
    }
}

void flatten(FKind op, const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind == op) {
        flatten(op, f->a, out);
        flatten(op, f->b, out);
    } else {
        out.push_back(f);
    }
}

FormulaPtr simplify_rec(Branch b, const FormulaPtr& f);

FormulaPtr simplify_junction(Branch b, const FormulaPtr& f) {
    const bool conj = f->kind == FKind::And;
    std::vector<FormulaPtr> kids;
    flatten(f->kind, f, kids);
    std::vector<FormulaPtr> flat;
    for (const auto& k : kids) {
        FormulaPtr s = simplify_rec(b, k);
        if (conj ? is_false_const(s) : is_true_const(s)) {
            return conj ? f_false() : f_true();
        }
        if (conj ? is_true_const(s) : is_false_const(s)) continue;
        if (s->kind == f->kind) {
            flatten(f->kind, s, flat);  // children may have re-flattened shapes
        } else {
            flat.push_back(std::move(s));
        }
    }
    std::sort(flat.begin(), flat.end(),
              [](const FormulaPtr& x, const FormulaPtr& y) { return formula_less(x, y); });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const FormulaPtr& x, const FormulaPtr& y) {
                               return formula_equal(x, y);
                           }),
               flat.end());
    // A member and its pointwise complement decide the junction.
    for (const auto& m : flat) {
        if (m->kind != FKind::Atom) continue;
        FormulaPtr c = complement_atom(b, m);
        if (!c) continue;
        for (const auto& n : flat) {
            if (formula_equal(n, c)) return conj ? f_false() : f_true();
        }
    }
    // Absorption inside a disjunction of conjunctions: a disjunct whose
    // conjunct set contains another disjunct's set is redundant.
    if (!conj && flat.size() > 1) {
        std::vector<std::vector<FormulaPtr>> sets(flat.size());
        for (std::size_t i = 0; i < flat.size(); ++i) flatten(FKind::And, flat[i], sets[i]);
        auto subset = [](const std::vector<FormulaPtr>& small,
                         const std::vector<FormulaPtr>& big) {
            for (const auto& s : small) {
                bool found = false;
                for (const auto& t : big) {
                    if (formula_equal(s, t)) { found = true; break; }
                }
                if (!found) return false;
            }
            return true;
        };
        std::vector<bool> drop(flat.size(), false);
        for (std::size_t i = 0; i < flat.size(); ++i) {
            for (std::size_t j = 0; j < flat.size(); ++j) {
                if (i == j || drop[i] || drop[j]) continue;
                if (sets[i].size() <= sets[j].size() && subset(sets[i], sets[j])) {
                    drop[j] = true;
                }
            }
        }
        std::vector<FormulaPtr> kept;
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (!drop[i]) kept.push_back(flat[i]);
        }
        flat = std::move(kept);
    }
    if (flat.empty()) return conj ? f_true() : f_false();
    FormulaPtr acc = flat[0];
    for (std::size_t i = 1; i < flat.size(); ++i) {
        acc = conj ? f_and(acc, flat[i]) : f_or(acc, flat[i]);
    }
    return acc;
}

FormulaPtr simplify_rec(Branch b, const FormulaPtr& f) {
    switch (f->kind) {
        case FKind::Atom: return canon_atom(b, f);
        case FKind::And:
        case FKind::Or: return simplify_junction(b, f);
        case FKind::Not: {
            FormulaPtr s = simplify_rec(b, f->a);
            if (is_true_const(s)) return f_false();
            if (is_false_const(s)) return f_true();
            return f_not(s);
        }
        case FKind::Implies: return f_implies(simplify_rec(b, f->a), simplify_rec(b, f->b));
        case FKind::Iff: return f_iff(simplify_rec(b, f->a), simplify_rec(b, f->b));
        case FKind::Exists: return f_exists(f->var, simplify_rec(b, f->a));
        case FKind::Forall: return f_forall(f->var, simplify_rec(b, f->a));
    }
    return f;
}

// Distributes an NNF quantifier-free formula into disjuncts of atom lists.
void to_dnf(const FormulaPtr& f, std::vector<std::vector<FormulaPtr>>& out, long budget) {
    if (f->kind == FKind::Atom) {
        out.push_back({f});
        return;
    }
    if (f->kind == FKind::Or) {
        to_dnf(f->a, out, budget);
        to_dnf(f->b, out, budget);
        return;
    }
    if (f->kind == FKind::And) {
        std::vector<std::vector<FormulaPtr>> left, right;
        to_dnf(f->a, left, budget);
        to_dnf(f->b, right, budget);
        long total = 0;
        for (const auto& l : left) {
            for (const auto& r : right) {
                total += static_cast<long>(l.size() + r.size());
                if (total > budget) {
                    throw BudgetExceeded("disjunctive expansion exceeds " +
                                         std::to_string(budget) + " atoms");
                }
                std::vector<FormulaPtr> both = l;
                both.insert(both.end(), r.begin(), r.end());
                out.push_back(std::move(both));
            }
        }
        return;
    }
    throw UnsupportedFragment("quantifier-free matrix",
                              "expected negation-normal and/or/atom structure");
}

// Eliminates a single innermost existential over a quantifier-free NNF body.
FormulaPtr eliminate_one(const std::string& var, const FormulaPtr& body, Branch b,
                         const EliminationConfig& cfg) {
    {
        const auto fv = free_vars(body);
        if (std::find(fv.begin(), fv.end(), var) == fv.end()) return body;
    }
    std::vector<std::vector<FormulaPtr>> dnf;
    to_dnf(body, dnf, cfg.max_atoms);
    std::vector<FormulaPtr> disjuncts;
    for (const auto& conjunct : dnf) {
        std::vector<NormalizedAtom> xatoms;
        std::vector<FormulaPtr> rest;
        bool dead = false;
        for (const auto& atom : conjunct) {
            FormulaPtr c = canon_atom(b, atom);
            if (is_false_const(c)) { dead = true; break; }
            if (is_true_const(c)) continue;
            if (c->kind != FKind::Atom) {
                // canon_atom may split a defensive ~ into two weak atoms
                std::vector<FormulaPtr> parts;
                flatten(FKind::And, c, parts);
                for (const auto& p : parts) {
                    const NormalizedAtom na = to_normalized_atom(p);
                    bool uses_var = false;
                    if (const auto* oa = std::get_if<OrderAtom>(&na)) {
                        uses_var = oa->p.contains_var(var);
                    } else {
                        const auto& va = std::get<ValueAtom>(na);
                        uses_var = va.p.contains_var(var) || va.q.contains_var(var);
                    }
                    if (uses_var) xatoms.push_back(na); else rest.push_back(p);
                }
                continue;
            }
            const NormalizedAtom na = to_normalized_atom(c);
            bool uses_var = false;
            if (const auto* oa = std::get_if<OrderAtom>(&na)) {
                uses_var = oa->p.contains_var(var);
            } else {
                const auto& va = std::get<ValueAtom>(na);
                uses_var = va.p.contains_var(var) || va.q.contains_var(var);
            }
            if (uses_var) xatoms.push_back(na); else rest.push_back(c);
        }
        if (dead) continue;
        FormulaPtr solved;
        if (xatoms.empty()) {
            solved = f_true();
        } else if (b == Branch::RCVF) {
            std::vector<OrderAtom> oatoms;
            for (const auto& na : xatoms) {
                if (const auto* oa = std::get_if<OrderAtom>(&na)) {
                    if (static_cast<int>(oa->p.degree(var)) > cfg.max_degree) {
                        throw UnsupportedFragment(
                            "exists " + var,
                            "degree above the configured bound in the quantified variable");
                    }
                    oatoms.push_back(*oa);
                } else {
                    throw UnsupportedFragment(
                        "exists " + var,
                        "valuation constraints on the quantified variable on the "
                        "field-ordered branch");
                }
            }
            solved = eliminate_fragment_a(var, oatoms, cfg);
        } else {
            bool has_value_atom = false;
            for (const auto& na : xatoms) {
                if (std::holds_alternative<ValueAtom>(na)) has_value_atom = true;
            }
            if (!has_value_atom) {
                std::vector<OrderAtom> oatoms;
                for (const auto& na : xatoms) {
                    const auto& oa = std::get<OrderAtom>(na);
                    if (oa.sigma == OrderAtom::Sigma::GeqZero ||
                        oa.sigma == OrderAtom::Sigma::GtZero) {
                        throw UnsupportedFragment(
                            "exists " + var,
                            "field-order constraints on the valuation branch");
                    }
                    if (static_cast<int>(oa.p.degree(var)) > cfg.max_degree) {
                        throw UnsupportedFragment(
                            "exists " + var,
                            "degree above the configured bound in the quantified variable");
                    }
                    oatoms.push_back(oa);
                }
                solved = eliminate_fragment_b(var, oatoms, cfg);
            } else {
                for (const auto& na : xatoms) {
                    long deg = 0;
                    if (const auto* oa = std::get_if<OrderAtom>(&na)) {
                        if (oa->sigma == OrderAtom::Sigma::GeqZero ||
                            oa->sigma == OrderAtom::Sigma::GtZero) {
                            throw UnsupportedFragment(
                                "exists " + var,
                                "field-order constraints on the valuation branch");
                        }
                        deg = oa->p.degree(var);
                    } else {
                        const auto& va = std::get<ValueAtom>(na);
                        deg = std::max(va.p.degree(var), va.q.degree(var));
                    }
                    if (deg > 1) {
                        throw UnsupportedFragment(
                            "exists " + var,
                            "valuation constraints need degree <= 1 in the "
                            "quantified variable");
                    }
                }
                solved = eliminate_fragment_c(var, xatoms, cfg);
            }
        }
        FormulaPtr d = fold_and(solved, fold_and_all(rest));
        if (cfg.simplify) d = simplify_rec(b, d);
        disjuncts.push_back(std::move(d));
    }
    FormulaPtr out = fold_or_all(disjuncts);
    if (cfg.simplify) out = simplify_rec(b, out);
    if (atom_count(out) > cfg.max_atoms) {
        throw BudgetExceeded("eliminating " + var + " produced more than " +
                             std::to_string(cfg.max_atoms) + " atoms");
    }
    return out;
}

// Negation followed by re-normalization; inputs here are quantifier-free,
// so alpha-renaming inside normalize() cannot touch any variable.
FormulaPtr nnf_negate(const FormulaPtr& f) { return normalize(f_not(f)); }

FormulaPtr eliminate_rec(const FormulaPtr& f, Branch b, const EliminationConfig& cfg) {
    switch (f->kind) {
        case FKind::Atom: return f;
        case FKind::And: return fold_and(eliminate_rec(f->a, b, cfg),
                                         eliminate_rec(f->b, b, cfg));
        case FKind::Or: return fold_or(eliminate_rec(f->a, b, cfg),
                                       eliminate_rec(f->b, b, cfg));
        case FKind::Exists: {
            FormulaPtr body = eliminate_rec(f->a, b, cfg);
            return eliminate_one(f->var, body, b, cfg);
        }
        case FKind::Forall: {
            FormulaPtr body = eliminate_rec(f->a, b, cfg);
            FormulaPtr inner = eliminate_one(f->var, nnf_negate(body), b, cfg);
            return nnf_negate(inner);
        }
        default:
            throw UnsupportedFragment("normalized input",
                                      "unexpected connective after normalization");
    }
}

}  // namespace

FormulaPtr simplify_qf(Branch b, const FormulaPtr& f) {
    return simplify_rec(b, normalize(f));
}

FormulaPtr eliminate(const FormulaPtr& f, Branch b, const EliminationConfig& cfg) {
    if (cfg.max_degree != 1 && cfg.max_degree != 2) {
        throw InvalidConfig("max_degree must be 1 or 2");
    }
    FormulaPtr n = normalize(f);
    if (b == Branch::ACVF) n = merge_order_into_valuation(n);
    FormulaPtr out = eliminate_rec(n, b, cfg);
    if (cfg.simplify) out = simplify_rec(b, out);
    return out;
}

GuardedResult eliminate_guarded(const FormulaPtr& f, const EliminationConfig& cfg) {
    GuardedResult r;
    try {
        r.acvf_part = eliminate(f, Branch::ACVF, cfg);
    } catch (const UnsupportedFragment& e) {
        throw UnsupportedFragment("valued branch, " + e.location, e.reason);
    }
    try {
        r.rcvf_part = eliminate(f, Branch::RCVF, cfg);
    } catch (const UnsupportedFragment& e) {
        throw UnsupportedFragment("field-ordered branch, " + e.location, e.reason);
    }
    return r;
}

FormulaPtr guarded_formula(const GuardedResult& r) {
    if (formula_equal(r.acvf_part, r.rcvf_part)) return r.acvf_part;
    return fold_or(fold_and(branch_axiom(Branch::ACVF), r.acvf_part),
                   fold_and(branch_axiom(Branch::RCVF), r.rcvf_part));
}

}  // namespace qrc
