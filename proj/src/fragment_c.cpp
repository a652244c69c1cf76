// Existential elimination over one conjunction of valuation comparisons
// between sides linear in the quantified variable, together with linear
// equations and inequations, on the valued branch.
//
// Geometry: each side a*x + b with a nonzero names a center r = -b/a, and
// v(a*x + b) = v(a) + v(x - r).  Fixing a center r_k, every atom's truth
// depends on the distance mu = v(x - r_k) piecewise, switching only at
// finitely many critical radii: distances between centers v(r_k - r_j) and
// solutions of v(a_i) + mu = (value of something x-free).  The reference
// set below over-approximates those radii; extra references only add sound
// disjuncts.  Test points: every center, plus a generic point on each
// critical sphere around each center, plus generic points strictly inside
// and strictly outside each sphere (covering open intervals between critical
// radii and the unbounded-below region), plus x = 0 as the fallback for the
// regime where every side degenerates to a constant.  Degenerate-parameter
// regimes need no case split here: each test point's guard turns it off
// exactly where it is undefined, and the substitution tables carry their own
// vanishing-leader arms.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/qe.hpp"
#include "qe_detail.hpp"

namespace qrc::qe_detail {

namespace {

struct Side {
    Polynomial b;  // constant coefficient
    Polynomial a;  // coefficient of the quantified variable (may be zero)
};

struct PairLess {
    bool operator()(const std::pair<Polynomial, Polynomial>& x,
                    const std::pair<Polynomial, Polynomial>& y) const {
        if (Polynomial::less(x.first, y.first)) return true;
        if (Polynomial::less(y.first, x.first)) return false;
        return Polynomial::less(x.second, y.second);
    }
};

using PairSet = std::set<std::pair<Polynomial, Polynomial>, PairLess>;

}  // namespace

FormulaPtr eliminate_fragment_c(const std::string& var,
                                const std::vector<NormalizedAtom>& xatoms,
                                const EliminationConfig& cfg) {
    std::vector<Side> sides;
    PairSet seen_sides;
    auto add_side = [&](const Polynomial& s) {
        const auto cs = s.coeffs_in(var);
        if (cs.size() > 2) {
            throw UnsupportedFragment(
                "exists " + var,
                "valuation constraints of degree > 1 in the quantified variable");
        }
        Side side{cs[0], cs.size() > 1 ? cs[1] : Polynomial{}};
        if (seen_sides.insert({side.b, side.a}).second) sides.push_back(std::move(side));
    };
    for (const auto& atom : xatoms) {
        if (const auto* oa = std::get_if<OrderAtom>(&atom)) {
            add_side(oa->p);
        } else {
            const auto& va = std::get<ValueAtom>(atom);
            add_side(va.p);
            add_side(va.q);
        }
    }

    std::vector<Side> xsides;
    for (const auto& s : sides) {
        if (!s.a.is_zero()) xsides.push_back(s);
    }
    std::vector<Polynomial> wlist;  // possible x-free values, including the
    for (const auto& s : sides) {   // degenerate value of every x-side
        if (!s.b.is_zero()) wlist.push_back(s.b);
    }

    std::vector<std::pair<Polynomial, Polynomial>> centers;
    for (const auto& s : xsides) centers.emplace_back(-s.b, s.a);

    std::vector<TestPoint> pts;
    pts.push_back(TestPoint::finite(Polynomial{}, Polynomial::integer(1)));
    const Polynomial one = Polynomial::integer(1);
    for (std::size_t k = 0; k < xsides.size(); ++k) {
        const Side& sk = xsides[k];
        pts.push_back(TestPoint::finite(-sk.b, sk.a));
        PairSet refs;
        refs.insert({one, one});
        for (std::size_t j = 0; j < xsides.size(); ++j) {
            if (j == k) continue;
            const Side& sj = xsides[j];
            const Polynomial d = sj.b * sk.a - sk.b * sj.a;  // center separation
            if (d.is_zero()) continue;
            for (const auto& si : xsides) refs.insert({d, sk.a * si.a});
        }
        for (const auto& w : wlist) {
            for (const auto& si : xsides) refs.insert({w, si.a});
        }
        for (const auto& [rn, rd] : refs) {
            for (const auto rel :
                 {TestPoint::RadiusRel::EqualTo, TestPoint::RadiusRel::StrictlyInside,
                  TestPoint::RadiusRel::StrictlyOutside}) {
                pts.push_back(TestPoint::ball(-sk.b, sk.a, rn, rd, rel, centers));
            }
        }
    }

    std::vector<FormulaPtr> disjuncts;
    long total = 0;
    for (const auto& tp : pts) {
        FormulaPtr conj = tp.guard;
        for (const auto& atom : xatoms) {
            if (is_false_const(conj)) break;
            conj = fold_and(conj, substitute_virtual(atom, var, tp));
        }
        if (is_false_const(conj)) continue;
        total += atom_count(conj);
        if (total > cfg.max_atoms) {
            throw BudgetExceeded("eliminating " + var + " produced more than " +
                                 std::to_string(cfg.max_atoms) + " atoms");
        }
        disjuncts.push_back(std::move(conj));
    }
    return fold_or_all(disjuncts);
}

}  // namespace qrc::qe_detail
