// Existential elimination over one conjunction of field-order atoms
// (degree <= 2 in the quantified variable) by virtual substitution.
//
// Completeness: the satisfying set of the conjunction is a finite union of
// intervals whose finite endpoints are roots of the atom polynomials.  If it
// is nonempty it either extends to -infinity, contains one of those roots,
// or is open on the left at one of them — so testing -infinity, every
// guarded root candidate, and a point just above each candidate suffices.
// Degenerate parameter regimes (a leading coefficient vanishing) are covered
// by the lower-degree root candidates, whose guards select exactly them.

#include <string>
#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/qe.hpp"
#include "qe_detail.hpp"

namespace qrc::qe_detail {

FormulaPtr eliminate_fragment_a(const std::string& var,
                                const std::vector<OrderAtom>& xatoms,
                                const EliminationConfig& cfg) {
    std::vector<TestPoint> pts;
    pts.push_back(TestPoint::minus_infinity());
    auto add_with_eps = [&pts](TestPoint tp) {
        if (is_false_const(tp.guard)) return;  // candidate can never be defined
        TestPoint eps = TestPoint::eps_above(tp);
        pts.push_back(std::move(tp));
        pts.push_back(std::move(eps));
    };
    for (const auto& oa : xatoms) {
        const auto cs = oa.p.coeffs_in(var);
        if (cs.size() == 2) {
            add_with_eps(TestPoint::finite(-cs[0], cs[1]));
        } else if (cs.size() == 3) {
            add_with_eps(TestPoint::root(cs[2], cs[1], cs[0], +1));
            add_with_eps(TestPoint::root(cs[2], cs[1], cs[0], -1));
            add_with_eps(TestPoint::finite(-cs[0], cs[1]));
        } else {
            throw UnsupportedFragment(
                "exists " + var,
                "order atoms of degree > 2 in the quantified variable");
        }
    }
    std::vector<FormulaPtr> disjuncts;
    for (const auto& tp : pts) {
        FormulaPtr conj = tp.guard;
        for (const auto& oa : xatoms) {
            if (is_false_const(conj)) break;
            conj = fold_and(conj, substitute_virtual(oa, var, tp));
        }
        disjuncts.push_back(std::move(conj));
    }
    FormulaPtr out = fold_or_all(disjuncts);
    if (atom_count(out) > cfg.max_atoms) {
        throw BudgetExceeded("eliminating " + var + " produced more than " +
                             std::to_string(cfg.max_atoms) + " atoms");
    }
    return out;
}

}  // namespace qrc::qe_detail
