// Randomized agreement campaigns backing the eliminator: each draws a fresh
// quantified formula, eliminates it, and cross-checks the result against an
// independent decision path on concrete instances.

#include "qrc/fuzz.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qrc/formula.hpp"
#include "qrc/models.hpp"
#include "qrc/oracles.hpp"
#include "qrc/printer.hpp"
#include "qrc/qe.hpp"
#include "qrc/rng.hpp"
#include "qrc/upoly.hpp"

namespace qrc {

namespace {

template <class F>
F from_rat(const Rational& c);
template <>
Rational from_rat<Rational>(const Rational& c) {
    return c;
}
template <>
RatFuncElem from_rat<RatFuncElem>(const Rational& c) {
    return RatFuncElem::from_rational(c);
}
template <>
LaurentElem from_rat<LaurentElem>(const Rational& c) {
    return LaurentElem::from_rational(c);
}

template <class F>
F eval_poly(const Polynomial& p, const std::map<std::string, F>& env) {
    F acc = from_rat<F>(Rational(0));
    for (const auto& [mono, coef] : p.terms()) {
        F term = from_rat<F>(coef);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            const F& base = env.at(p.vars()[i]);
            for (unsigned e = 0; e < mono[i]; ++e) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

// Random polynomial in x of degree 1..2 whose coefficients are small
// integers, optionally shifted by a small multiple of a parameter.
Polynomial random_x_poly(Rng& rng, const std::vector<std::string>& params,
                         int param_chance_in) {
    Polynomial p;
    const int degx = 1 + static_cast<int>(rng.below(2));
    for (int k = 0; k <= degx; ++k) {
        Polynomial coef = Polynomial::integer(static_cast<long>(rng.range(-5, 5)));
        if (rng.below(static_cast<std::uint64_t>(param_chance_in)) == 0) {
            const auto& v = params[rng.below(params.size())];
            coef = coef + Polynomial::integer(static_cast<long>(rng.range(-3, 3))) *
                              Polynomial::variable(v);
        }
        p = p + coef * Polynomial::variable("x").pow(static_cast<unsigned>(k));
    }
    return p;
}

void note_mismatch(FuzzReport& r, const std::string& what) {
    ++r.mismatched;
    if (r.first_mismatch.empty()) r.first_mismatch = what;
}

}  // namespace

FuzzReport fuzz_fragment_a(long cases, std::uint64_t seed) {
    FuzzReport report;
    Rng rng(seed);
    const auto mr = ModelDescriptor::mr();
    const EliminationConfig cfg;
    const std::vector<std::string> params{"y", "z"};
    while (report.cases < cases) {
        const int natoms = 1 + static_cast<int>(rng.below(4));
        std::vector<OrderAtom> oatoms;
        std::vector<FormulaPtr> fatoms;
        for (int i = 0; i < natoms; ++i) {
            Polynomial p = random_x_poly(rng, params, 2);
            if (!p.contains_var("x")) continue;
            const auto sig = static_cast<OrderAtom::Sigma>(rng.below(4));
            oatoms.push_back(OrderAtom{p, sig});
            fatoms.push_back(atom_to_formula(OrderAtom{p, sig}));
        }
        if (fatoms.empty()) continue;
        const FormulaPtr f = f_exists("x", f_and_all(fatoms));
        const FormulaPtr elim = eliminate(f, Branch::RCVF, cfg);
        // parameters drawn from Q on even cases and from Q(t) on odd ones
        ModelElem ay, az;
        if (report.cases % 2 == 0) {
            const Rational ry = make_rational(rng.range(-8, 8), 1 + rng.range(0, 3));
            const Rational rz = make_rational(rng.range(-8, 8), 1 + rng.range(0, 3));
            ay = RatFuncElem::from_rational(ry);
            az = RatFuncElem::from_rational(rz);
        } else {
            ay = sample_elem(mr, rng, 2);
            az = sample_elem(mr, rng, 2);
        }
        const Assignment env{{"y", ay}, {"z", az}};
        const TruthValue got = eval_qf(mr, elim, env);
        const std::map<std::string, RatFuncElem> fenv{
            {"y", std::get<RatFuncElem>(ay)}, {"z", std::get<RatFuncElem>(az)}};
        std::vector<ExistsAtom<RatFuncElem>> oa;
        for (const auto& a : oatoms) {
            const auto cs = a.p.coeffs_in("x");
            std::vector<RatFuncElem> up;
            for (const auto& c : cs) up.push_back(eval_poly(c, fenv));
            oa.push_back({UPoly<RatFuncElem>(up), a.sigma});
        }
        const bool want = decide_exists_order(oa);
        ++report.cases;
        if (got == tv(want)) {
            ++report.agreed;
        } else {
            note_mismatch(report, render(f) + "  with y=" + elem_str(ay) +
                                      ", z=" + elem_str(az));
        }
    }
    return report;
}

FuzzReport fuzz_fragment_b(long cases, std::uint64_t seed) {
    FuzzReport report;
    Rng rng(seed);
    const auto ma = ModelDescriptor::ma();
    const EliminationConfig cfg;
    const std::vector<std::string> params{"y"};
    while (report.cases < cases) {
        const int neq = 1 + static_cast<int>(rng.below(2));
        const int nin = static_cast<int>(rng.below(3));
        std::vector<Polynomial> eqs, ins;
        std::vector<FormulaPtr> fatoms;
        for (int i = 0; i < neq; ++i) {
            Polynomial p = random_x_poly(rng, params, 3);
            if (!p.contains_var("x")) continue;
            eqs.push_back(p);
            fatoms.push_back(atom_to_formula(OrderAtom{p, OrderAtom::Sigma::EqZero}));
        }
        for (int i = 0; i < nin; ++i) {
            Polynomial p = random_x_poly(rng, params, 3);
            if (!p.contains_var("x")) continue;
            ins.push_back(p);
            fatoms.push_back(atom_to_formula(OrderAtom{p, OrderAtom::Sigma::NeqZero}));
        }
        if (eqs.empty() && ins.empty()) continue;
        const FormulaPtr f = f_exists("x", f_and_all(fatoms));
        const FormulaPtr elim = eliminate(f, Branch::ACVF, cfg);
        const Rational yval = make_rational(rng.range(-6, 6), 1 + rng.range(0, 3));
        const std::map<std::string, Rational> qenv{{"y", yval}};
        bool want = true;
        bool dead = false;
        UPoly<Rational> h;
        bool has_eq = false;
        for (const auto& p : eqs) {
            const auto cs = p.coeffs_in("x");
            std::vector<Rational> up;
            for (const auto& c : cs) up.push_back(eval_poly(c, qenv));
            const UPoly<Rational> u{up};
            if (u.is_zero()) continue;  // 0 = 0
            if (u.degree() == 0) {
                dead = true;
                break;
            }
            h = has_eq ? upoly_gcd(h, u) : u;
            has_eq = true;
        }
        std::vector<UPoly<Rational>> uins;
        for (const auto& p : ins) {
            const auto cs = p.coeffs_in("x");
            std::vector<Rational> up;
            for (const auto& c : cs) up.push_back(eval_poly(c, qenv));
            uins.emplace_back(up);
            if (uins.back().is_zero()) dead = true;  // 0 != 0
        }
        if (dead) {
            want = false;
        } else if (!has_eq) {
            want = true;  // an infinite field dodges finitely many roots
        } else if (h.degree() == 0) {
            want = false;
        } else {
            const UPoly<Rational> hs = squarefree_part(h);
            UPoly<Rational> g = UPoly<Rational>::constant(Rational(1));
            for (const auto& u : uins) g = g * u;
            want = hs.degree() > upoly_gcd(hs, g).degree();
        }
        Assignment env;
        if (free_vars(elim).count("y") != 0) {
            env.emplace("y", ModelElem(LaurentElem::from_rational(yval)));
        }
        const TruthValue got = eval_qf(ma, elim, env);
        ++report.cases;
        if (got == tv(want)) {
            ++report.agreed;
        } else {
            note_mismatch(report, render(f) + "  with y=" + yval.get_str());
        }
    }
    return report;
}

FuzzReport fuzz_fragment_c(long cases, std::uint64_t seed) {
    FuzzReport report;
    Rng rng(seed);
    const auto ma = ModelDescriptor::ma();
    const EliminationConfig cfg;
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    while (report.cases < cases) {
        // sides linear in x; zero leader makes a parameter-only side
        const int nsides = 2 + static_cast<int>(rng.below(3));
        std::vector<Polynomial> sides;
        for (int i = 0; i < nsides; ++i) {
            Polynomial b = Polynomial::integer(static_cast<long>(rng.range(-3, 3)));
            if (rng.coin()) {
                b = b + Polynomial::integer(static_cast<long>(rng.range(-2, 2))) * y;
            }
            sides.push_back(Polynomial::integer(static_cast<long>(rng.range(-2, 2))) * x + b);
        }
        if (![&] {
                for (const auto& s : sides) {
                    if (s.contains_var("x")) return true;
                }
                return false;
            }()) {
            sides[0] = sides[0] + x;
        }
        auto pick = [&]() -> const Polynomial& { return sides[rng.below(sides.size())]; };
        const int natoms = 1 + static_cast<int>(rng.below(3));
        FormulaPtr body;
        for (int i = 0; i < natoms; ++i) {
            FormulaPtr a;
            switch (rng.below(4)) {
                case 0: a = atom_to_formula(ValueAtom{pick(), pick(), ValueAtom::Rho::Le}); break;
                case 1: a = atom_to_formula(ValueAtom{pick(), pick(), ValueAtom::Rho::Eq}); break;
                case 2: a = atom_to_formula(OrderAtom{pick(), OrderAtom::Sigma::EqZero}); break;
                default: a = atom_to_formula(OrderAtom{pick(), OrderAtom::Sigma::NeqZero}); break;
            }
            body = body ? (rng.coin() ? f_and(body, a) : f_or(body, a)) : a;
        }
        const FormulaPtr f = f_exists("x", body);
        const FormulaPtr elim = eliminate(f, Branch::ACVF, cfg);
        const ModelElem yv = sample_elem(ma, rng, 2);
        Assignment env;
        if (free_vars(elim).count("y") != 0) env.emplace("y", yv);
        const TruthValue claim = eval_qf(ma, elim, env);
        if (claim == TruthValue::Indeterminate) {
            ++report.cases;
            ++report.skipped;
            continue;
        }
        // candidate witnesses: centers, and displacements c*t^rho around
        // each center and around 0, across the critical radii
        const LaurentElem& yl = std::get<LaurentElem>(yv);
        const std::map<std::string, LaurentElem> lenv{{"y", yl}};
        std::vector<LaurentElem> centers;
        std::set<long> rho_set{-2, -1, 0, 1, 2};
        auto note_v = [&rho_set](const LaurentElem& e) {
            const VOrd v = e.vord();
            if (v.kind == VOrd::Kind::Known) {
                rho_set.insert(v.k - 1);
                rho_set.insert(v.k);
                rho_set.insert(v.k + 1);
            }
        };
        for (const auto& s : sides) {
            const auto cs = s.coeffs_in("x");
            const LaurentElem bi = eval_poly(cs[0], lenv);
            note_v(bi);
            if (cs.size() > 1 && !cs[1].is_zero()) {
                const LaurentElem ai = eval_poly(cs[1], lenv);
                note_v(ai);
                if (ai.is_zero3() == TruthValue::False) {
                    centers.push_back((-bi) * ai.recip());
                    note_v(centers.back());
                }
            }
        }
        for (std::size_t i = 0; i < centers.size(); ++i) {
            for (std::size_t j = i + 1; j < centers.size(); ++j) {
                note_v(centers[i] - centers[j]);
            }
        }
        std::vector<LaurentElem> dirs;
        for (long c : {1L, 2L, 3L, 5L}) dirs.push_back(LaurentElem::from_rational(Rational(c)));
        dirs.push_back(LaurentElem::from_rational(Rational(1)) + LaurentElem::t());
        dirs.push_back(LaurentElem::from_rational(Rational(2)) + LaurentElem::t());
        dirs.push_back(LaurentElem::from_rational(Rational(1)) - LaurentElem::t());
        dirs.push_back(LaurentElem::from_rational(Rational(3)) +
                       LaurentElem::t() * LaurentElem::from_rational(Rational(2)));
        std::vector<LaurentElem> cands;
        cands.push_back(LaurentElem());  // zero
        for (const auto& c : centers) cands.push_back(c);
        std::vector<LaurentElem> anchors = centers;
        anchors.push_back(LaurentElem());
        for (const auto& base : anchors) {
            for (long rho : rho_set) {
                const LaurentElem step = LaurentElem::make(rho, {Rational(1)},
                                                           LaurentElem::kExact);
                for (const auto& d : dirs) cands.push_back(base + d * step);
            }
        }
        bool witnessed = false;
        for (const auto& cand : cands) {
            Assignment cenv{{"x", ModelElem(cand)}, {"y", yv}};
            if (eval_qf(ma, body, cenv) == TruthValue::True) {
                witnessed = true;
                break;
            }
        }
        ++report.cases;
        if (witnessed == (claim == TruthValue::True)) {
            ++report.agreed;
        } else {
            note_mismatch(report, render(f) + "  with y=" + elem_str(yv) +
                                      (witnessed ? " (witness found, claim false)"
                                                 : " (no witness, claim true)"));
        }
    }
    return report;
}

}  // namespace qrc
