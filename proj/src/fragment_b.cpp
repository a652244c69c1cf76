// Existential elimination over one conjunction of equations and inequations
// (degree <= 2 in the quantified variable) on the algebraically closed
// branch.  The valuation plays no role for =/!= constraints, so this is
// root-existence over an algebraically closed field.
//
// Method: enumerate parameter regimes by branching on each non-constant
// leading coefficient (zero vs nonzero) until every remaining atom has a
// definite degree.  Within a regime:
//   * no equations: an infinite field always has a point avoiding the
//     finitely many roots of the inequation polynomials — true;
//   * a linear equation pins x = -b/a: substitute that into everything else;
//   * two quadratics combine into the lower-degree A2*f1 - A1*f2, an
//     invertible exchange when both leaders are nonzero;
//   * one quadratic h plus inequations g_j: reduce G = prod g_j modulo h to
//     R = alpha*x + beta (each step multiplies by the unit leader A, so R
//     agrees with a unit multiple of G on the roots of h).  Some root of h
//     avoids every g_j unless R vanishes on both roots, i.e. unless the
//     resultant-like product N1 = alpha^2*C - alpha*beta*B + A*beta^2 and the
//     sum S1 = -alpha*B + 2*A*beta both vanish (sum/product of R at the two
//     roots, scaled by A — the test is characteristic-independent).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/qe.hpp"
#include "qe_detail.hpp"

namespace qrc::qe_detail {

namespace {

using Sigma = OrderAtom::Sigma;

// One atom in coefficient form, ascending powers of the quantified variable.
struct CAtom {
    std::vector<Polynomial> cs;
    bool definite = false;  // leading coefficient known nonzero in this regime
};

CAtom to_catom(const Polynomial& p, const std::string& var) {
    return CAtom{p.coeffs_in(var), false};
}

Polynomial to_poly(const CAtom& a, const std::string& var) {
    return Polynomial::from_coeffs(a.cs, var);
}

FormulaPtr solve(const std::string& var, std::vector<CAtom> eqs, std::vector<CAtom> ineqs,
                 FormulaPtr conds, int depth) {
    if (depth > 256) throw BudgetExceeded("regime enumeration too deep for " + var);
    // Normalize until every surviving atom is definite of degree >= 1.
    for (;;) {
        if (is_false_const(conds)) return f_false();
        bool changed = false;
        for (std::size_t i = 0; i < eqs.size();) {
            CAtom& e = eqs[i];
            if (!e.definite) {
                while (!e.cs.empty() && e.cs.back().is_zero()) e.cs.pop_back();
            }
            if (e.cs.empty()) {  // 0 = 0
                eqs.erase(eqs.begin() + static_cast<long>(i));
                changed = true;
            } else if (e.cs.size() == 1) {  // variable-free equation
                conds = fold_and(conds, order_formula(e.cs[0], Sigma::EqZero));
                eqs.erase(eqs.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        for (std::size_t i = 0; i < ineqs.size();) {
            CAtom& g = ineqs[i];
            if (!g.definite) {
                while (!g.cs.empty() && g.cs.back().is_zero()) g.cs.pop_back();
            }
            if (g.cs.empty()) return f_false();  // 0 != 0
            if (g.cs.size() == 1) {
                conds = fold_and(conds, order_formula(g.cs[0], Sigma::NeqZero));
                ineqs.erase(ineqs.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        if (is_false_const(conds)) return f_false();
        // Mark constant leaders definite; branch on the first compound one.
        auto settle = [&](std::vector<CAtom>& list) -> FormulaPtr {
            for (std::size_t i = 0; i < list.size(); ++i) {
                CAtom& a = list[i];
                if (a.definite) continue;
                const Polynomial& top = a.cs.back();
                if (top.is_constant()) {  // nonzero: stripped above
                    a.definite = true;
                    continue;
                }
                std::vector<CAtom> eqs0 = eqs, ineqs0 = ineqs;
                auto& mirror0 = (&list == &eqs) ? eqs0 : ineqs0;
                mirror0[i].cs.pop_back();
                FormulaPtr low =
                    solve(var, std::move(eqs0), std::move(ineqs0),
                          fold_and(conds, order_formula(top, Sigma::EqZero)), depth + 1);
                a.definite = true;
                FormulaPtr high =
                    solve(var, std::move(eqs), std::move(ineqs),
                          fold_and(conds, order_formula(top, Sigma::NeqZero)), depth + 1);
                return fold_or(std::move(low), std::move(high));
            }
            return nullptr;
        };
        if (FormulaPtr r = settle(eqs)) return r;
        if (FormulaPtr r = settle(ineqs)) return r;
        if (changed) continue;

        if (eqs.empty()) return conds;  // infinite field dodges the inequations

        // A definite linear equation pins the value of the variable.
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (eqs[i].cs.size() != 2) continue;
            const TestPoint tp = TestPoint::finite(-eqs[i].cs[0], eqs[i].cs[1]);
            FormulaPtr acc = fold_and(conds, tp.guard);
            for (std::size_t j = 0; j < eqs.size(); ++j) {
                if (j == i) continue;
                acc = fold_and(acc, substitute_virtual(
                                        OrderAtom{to_poly(eqs[j], var), Sigma::EqZero},
                                        var, tp));
            }
            for (const auto& g : ineqs) {
                acc = fold_and(acc, substitute_virtual(
                                        OrderAtom{to_poly(g, var), Sigma::NeqZero},
                                        var, tp));
            }
            return acc;
        }

        // Two definite quadratics: exchange the second for their combination.
        if (eqs.size() >= 2) {
            const auto& f1 = eqs[0].cs;
            const auto& f2 = eqs[1].cs;
            CAtom s;
            s.cs = {f2[2] * f1[0] - f1[2] * f2[0], f2[2] * f1[1] - f1[2] * f2[1]};
            eqs[1] = std::move(s);
            continue;
        }

        // One definite quadratic plus inequations of definite degree.
        const Polynomial hc = eqs[0].cs[0];
        const Polynomial hb = eqs[0].cs[1];
        const Polynomial ha = eqs[0].cs[2];
        const Polynomial h = to_poly(eqs[0], var);
        Polynomial g = Polynomial::integer(1);
        for (const auto& q : ineqs) g = g * to_poly(q, var);
        const Polynomial x = Polynomial::variable(var);
        while (g.degree(var) >= 2) {
            const unsigned d = static_cast<unsigned>(g.degree(var));
            g = ha * g - g.lc_in(var) * x.pow(d - 2) * h;
        }
        const auto rcs = g.coeffs_in(var);
        const Polynomial beta = rcs[0];
        const Polynomial alpha = rcs.size() > 1 ? rcs[1] : Polynomial{};
        const Polynomial n1 = alpha * alpha * hc - alpha * beta * hb + ha * beta * beta;
        const Polynomial s1 = -(alpha * hb) + Polynomial::integer(2) * ha * beta;
        return fold_and(conds, fold_or(order_formula(n1, Sigma::NeqZero),
                                       order_formula(s1, Sigma::NeqZero)));
    }
}

}  // namespace

FormulaPtr eliminate_fragment_b(const std::string& var,
                                const std::vector<OrderAtom>& xatoms,
                                const EliminationConfig& cfg) {
    std::vector<CAtom> eqs;
    std::vector<CAtom> ineqs;
    for (const auto& oa : xatoms) {
        if (oa.p.degree(var) > 2) {
            throw UnsupportedFragment(
                "exists " + var, "equations of degree > 2 in the quantified variable");
        }
        if (oa.sigma == Sigma::EqZero) {
            eqs.push_back(to_catom(oa.p, var));
        } else if (oa.sigma == Sigma::NeqZero) {
            ineqs.push_back(to_catom(oa.p, var));
        } else {
            throw UnsupportedFragment(
                "exists " + var,
                "field-order constraints on the valuation branch");
        }
    }
    FormulaPtr out = solve(var, std::move(eqs), std::move(ineqs), f_true(), 0);
    if (atom_count(out) > cfg.max_atoms) {
        throw BudgetExceeded("eliminating " + var + " produced more than " +
                             std::to_string(cfg.max_atoms) + " atoms");
    }
    return out;
}

}  // namespace qrc::qe_detail
