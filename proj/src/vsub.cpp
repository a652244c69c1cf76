// Virtual-substitution tables: plugging a symbolic test point into a
// normalized atom yields a quantifier-free formula over the parameters.
//
// Soundness note that governs every constructor here: an equation or a
// valuation atom may be multiplied by -1 (a unit in every field) but never
// rescaled by other integer content, because dividing an equation by n is
// not an equivalence in residue characteristic p | n.  Order atoms (>=, >)
// only arise on the field-ordering branch, whose completions all have
// characteristic zero, so positive content rescaling is sound there.

#include "qrc/qe.hpp"

#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qe_detail.hpp"

namespace qrc {
namespace qe_detail {

namespace {

// Sign of the grlex-leading coefficient; 0 for the zero polynomial.
int leading_sign(const Polynomial& p) {
    if (p.is_zero()) return 0;
    return sign(p.terms().rbegin()->second);
}

bool is_unit_constant(const Polynomial& p) {
    if (!p.is_constant() || p.is_zero()) return false;
    const Rational c = p.constant_value();
    return rat_abs(c) == Rational(1);
}

}  // namespace

FormulaPtr fold_and(FormulaPtr a, FormulaPtr b) {
    if (is_false_const(a) || is_false_const(b)) return f_false();
    if (is_true_const(a)) return b;
    if (is_true_const(b)) return a;
    return f_and(std::move(a), std::move(b));
}

FormulaPtr fold_or(FormulaPtr a, FormulaPtr b) {
    if (is_true_const(a) || is_true_const(b)) return f_true();
    if (is_false_const(a)) return b;
    if (is_false_const(b)) return a;
    return f_or(std::move(a), std::move(b));
}

FormulaPtr fold_and_all(const std::vector<FormulaPtr>& fs) {
    FormulaPtr acc = f_true();
    for (const auto& f : fs) acc = fold_and(acc, f);
    return acc;
}

FormulaPtr fold_or_all(const std::vector<FormulaPtr>& fs) {
    FormulaPtr acc = f_false();
    for (const auto& f : fs) acc = fold_or(acc, f);
    return acc;
}

FormulaPtr order_formula(Polynomial p, OrderAtom::Sigma sigma) {
    using S = OrderAtom::Sigma;
    if (p.is_zero()) {
        return (sigma == S::EqZero || sigma == S::GeqZero) ? f_true() : f_false();
    }
    if (p.is_constant()) {
        const Rational c = p.constant_value();
        switch (sigma) {
            case S::GeqZero: return sign(c) >= 0 ? f_true() : f_false();
            case S::GtZero: return sign(c) > 0 ? f_true() : f_false();
            case S::EqZero:
                if (is_unit_constant(p)) return f_false();
                break;  // e.g. 2 = 0 is open in mixed characteristic
            case S::NeqZero:
                if (is_unit_constant(p)) return f_true();
                break;
        }
    }
    if (sigma == S::GeqZero || sigma == S::GtZero) {
        const Rational c = p.content();
        if (!(c == Rational(1))) p = p.scaled(Rational(1) / c);
    } else if (leading_sign(p) < 0) {
        p = -p;
    }
    return atom_to_formula(OrderAtom{std::move(p), sigma});
}

FormulaPtr value_formula(Polynomial p, Polynomial q, ValueAtom::Rho rho) {
    using R = ValueAtom::Rho;
    if (leading_sign(p) < 0) p = -p;
    if (leading_sign(q) < 0) q = -q;
    if (p == q) return rho == R::Lt ? f_false() : f_true();
    if (q.is_zero()) {  // right side has value +infinity
        switch (rho) {
            case R::Le: return f_true();
            case R::Lt: return order_formula(std::move(p), OrderAtom::Sigma::NeqZero);
            case R::Eq: return order_formula(std::move(p), OrderAtom::Sigma::EqZero);
        }
    }
    if (p.is_zero()) {  // left side has value +infinity
        switch (rho) {
            case R::Le: return order_formula(std::move(q), OrderAtom::Sigma::EqZero);
            case R::Lt: return f_false();
            case R::Eq: return order_formula(std::move(q), OrderAtom::Sigma::EqZero);
        }
    }
    return atom_to_formula(ValueAtom{std::move(p), std::move(q), rho});
}

long atom_count(const FormulaPtr& f) {
    if (!f) return 0;
    if (f->kind == FKind::Atom) return 1;
    return atom_count(f->a) + atom_count(f->b);
}

}  // namespace qe_detail

using qe_detail::fold_and;
using qe_detail::fold_and_all;
using qe_detail::fold_or;
using qe_detail::fold_or_all;
using qe_detail::order_formula;
using qe_detail::value_formula;

// ---------------------------------------------------------------------------
// Test-point factories
// ---------------------------------------------------------------------------

TestPoint TestPoint::finite(Polynomial num, Polynomial den) {
    TestPoint tp;
    tp.kind = Kind::FiniteTerm;
    tp.guard = order_formula(den, OrderAtom::Sigma::NeqZero);
    tp.num = std::move(num);
    tp.den = std::move(den);
    return tp;
}

TestPoint TestPoint::plus_infinity() {
    TestPoint tp;
    tp.kind = Kind::PlusInfinity;
    tp.guard = f_true();
    return tp;
}

TestPoint TestPoint::minus_infinity() {
    TestPoint tp;
    tp.kind = Kind::MinusInfinity;
    tp.guard = f_true();
    return tp;
}

TestPoint TestPoint::root(Polynomial a, Polynomial b, Polynomial c, int sgn) {
    TestPoint tp;
    tp.kind = Kind::RootExpression;
    const Polynomial disc = b * b - Polynomial::integer(4) * a * c;
    tp.guard = fold_and(order_formula(a, OrderAtom::Sigma::NeqZero),
                        order_formula(disc, OrderAtom::Sigma::GeqZero));
    tp.a = std::move(a);
    tp.b = std::move(b);
    tp.c = std::move(c);
    tp.sign = sgn;
    return tp;
}

TestPoint TestPoint::eps_above(TestPoint base) {
    TestPoint tp;
    tp.kind = Kind::EpsilonAbove;
    tp.guard = base.guard;
    tp.base = std::make_shared<const TestPoint>(std::move(base));
    return tp;
}

TestPoint TestPoint::eps_below(TestPoint base) {
    TestPoint tp;
    tp.kind = Kind::EpsilonBelow;
    tp.guard = base.guard;
    tp.base = std::make_shared<const TestPoint>(std::move(base));
    return tp;
}

TestPoint TestPoint::ball(Polynomial center_num, Polynomial center_den, Polynomial rad_num,
                          Polynomial rad_den, RadiusRel rel,
                          std::vector<std::pair<Polynomial, Polynomial>> avoid) {
    TestPoint tp;
    tp.kind = Kind::BallPoint;
    tp.guard = fold_and(order_formula(center_den, OrderAtom::Sigma::NeqZero),
                        fold_and(order_formula(rad_num, OrderAtom::Sigma::NeqZero),
                                 order_formula(rad_den, OrderAtom::Sigma::NeqZero)));
    tp.num = std::move(center_num);
    tp.den = std::move(center_den);
    tp.rad_num = std::move(rad_num);
    tp.rad_den = std::move(rad_den);
    tp.rel = rel;
    tp.avoid = std::move(avoid);
    return tp;
}

// ---------------------------------------------------------------------------
// Substitution tables
// ---------------------------------------------------------------------------

namespace {

using Sigma = OrderAtom::Sigma;
using Rho = ValueAtom::Rho;

// p(num/den) * den^deg, a polynomial in the parameters only.
Polynomial homogenize(const std::vector<Polynomial>& cs, const Polynomial& num,
                      const Polynomial& den) {
    const std::size_t d = cs.size() - 1;
    Polynomial acc;  // zero
    for (std::size_t k = 0; k <= d; ++k) {
        acc = acc + cs[k] * num.pow(static_cast<unsigned>(k)) *
                        den.pow(static_cast<unsigned>(d - k));
    }
    return acc;
}

FormulaPtr subst_finite_order(const OrderAtom& atom, const std::string& var,
                              const TestPoint& tp) {
    const auto cs = atom.p.coeffs_in(var);
    Polynomial big = homogenize(cs, tp.num, tp.den);
    const bool odd_degree = (cs.size() - 1) % 2 == 1;
    if (odd_degree && (atom.sigma == Sigma::GeqZero || atom.sigma == Sigma::GtZero)) {
        big = big * tp.den;  // restore an even clearing power so the sign survives
    }
    return order_formula(std::move(big), atom.sigma);
}

FormulaPtr subst_finite_value(const ValueAtom& atom, const std::string& var,
                              const TestPoint& tp) {
    const auto pcs = atom.p.coeffs_in(var);
    const auto qcs = atom.q.coeffs_in(var);
    const Polynomial pp = homogenize(pcs, tp.num, tp.den);
    const Polynomial qq = homogenize(qcs, tp.num, tp.den);
    // v(pp) - dp*v(den) <= v(qq) - dq*v(den), cleared by cross-multiplying.
    const auto dp = static_cast<unsigned>(pcs.size() - 1);
    const auto dq = static_cast<unsigned>(qcs.size() - 1);
    return value_formula(pp * tp.den.pow(dq), qq * tp.den.pow(dp), atom.rho);
}

// Sign conditions at +/-infinity: the leading nonzero coefficient decides.
FormulaPtr subst_infinity_order(const OrderAtom& atom, const std::string& var,
                                bool plus) {
    auto cs = atom.p.coeffs_in(var);
    if (!plus) {
        for (std::size_t k = 1; k < cs.size(); k += 2) cs[k] = -cs[k];
    }
    switch (atom.sigma) {
        case Sigma::EqZero: {
            std::vector<FormulaPtr> parts;
            for (const auto& c : cs) parts.push_back(order_formula(c, Sigma::EqZero));
            return fold_and_all(parts);
        }
        case Sigma::NeqZero: {
            std::vector<FormulaPtr> parts;
            for (const auto& c : cs) parts.push_back(order_formula(c, Sigma::NeqZero));
            return fold_or_all(parts);
        }
        case Sigma::GeqZero:
        case Sigma::GtZero: {
            FormulaPtr acc = atom.sigma == Sigma::GeqZero ? f_true() : f_false();
            for (const auto& c : cs) {  // ascending; the last wrap is the leader
                acc = fold_or(order_formula(c, Sigma::GtZero),
                              fold_and(order_formula(c, Sigma::EqZero), acc));
            }
            return acc;
        }
    }
    return f_false();
}

// Sign of p at (-b + s*sqrt(b^2-4ac)) / (2a), expressed via
//   p(root) = (u + w*sqrt(disc)) / (2 a^2)   with w already branch-adjusted.
FormulaPtr subst_root_order(const OrderAtom& atom, const std::string& var,
                            const TestPoint& tp) {
    const auto cs = atom.p.coeffs_in(var);
    if (cs.size() > 3) throw TableMiss("root substitution needs degree <= 2 in " + var);
    const Polynomial pg = cs[0];
    const Polynomial pf = cs.size() > 1 ? cs[1] : Polynomial{};
    const Polynomial pe = cs.size() > 2 ? cs[2] : Polynomial{};
    const Polynomial& a = tp.a;
    const Polynomial& b = tp.b;
    const Polynomial& c = tp.c;
    const Polynomial two = Polynomial::integer(2);
    const Polynomial u =
        pe * b * b - two * a * c * pe - a * b * pf + two * a * a * pg;
    Polynomial w = a * pf - b * pe;
    if (tp.sign < 0) w = -w;
    const Polynomial disc = b * b - Polynomial::integer(4) * a * c;
    const Polynomial norm = u * u - w * w * disc;  // sign of (u - w sqrt)(u + w sqrt)
    switch (atom.sigma) {
        case Sigma::EqZero:
            return fold_and(order_formula(norm, Sigma::EqZero),
                            order_formula(-(u * w), Sigma::GeqZero));
        case Sigma::NeqZero:
            return fold_or(order_formula(norm, Sigma::NeqZero),
                           order_formula(u * w, Sigma::GtZero));
        case Sigma::GtZero:
            return fold_or(
                fold_and(order_formula(u, Sigma::GtZero),
                         fold_or(order_formula(w, Sigma::GeqZero),
                                 order_formula(norm, Sigma::GtZero))),
                fold_and(order_formula(-u, Sigma::GeqZero),
                         fold_and(order_formula(w, Sigma::GtZero),
                                  order_formula(-norm, Sigma::GtZero))));
        case Sigma::GeqZero:
            return fold_or(
                fold_and(order_formula(u, Sigma::GeqZero),
                         fold_or(order_formula(w, Sigma::GeqZero),
                                 order_formula(norm, Sigma::GeqZero))),
                fold_and(order_formula(w, Sigma::GeqZero),
                         order_formula(-norm, Sigma::GeqZero)));
    }
    return f_false();
}

// Sign of p just above/below the base point: first nonvanishing derivative.
FormulaPtr subst_epsilon_order(const OrderAtom& atom, const std::string& var,
                               const TestPoint& tp, bool above) {
    std::vector<Polynomial> ds;
    Polynomial cur = atom.p;
    ds.push_back(cur);
    while (cur.contains_var(var)) {
        cur = cur.derivative(var);
        ds.push_back(cur);
    }
    const TestPoint& base = *tp.base;
    auto at_base = [&](const Polynomial& q, Sigma s) {
        return substitute_virtual(OrderAtom{q, s}, var, base);
    };
    auto signed_deriv = [&](std::size_t k) {
        return (above || k % 2 == 0) ? ds[k] : -ds[k];
    };
    switch (atom.sigma) {
        case Sigma::EqZero: {
            std::vector<FormulaPtr> parts;
            for (const auto& d : ds) parts.push_back(at_base(d, Sigma::EqZero));
            return fold_and_all(parts);
        }
        case Sigma::NeqZero: {
            std::vector<FormulaPtr> parts;
            for (const auto& d : ds) parts.push_back(at_base(d, Sigma::NeqZero));
            return fold_or_all(parts);
        }
        case Sigma::GeqZero:
        case Sigma::GtZero: {
            FormulaPtr acc = atom.sigma == Sigma::GeqZero ? f_true() : f_false();
            for (std::size_t k = ds.size(); k-- > 0;) {
                acc = fold_or(at_base(signed_deriv(k), Sigma::GtZero),
                              fold_and(at_base(ds[k], Sigma::EqZero), acc));
            }
            return acc;
        }
    }
    return f_false();
}

// Abstract value of one atom side at a ball point: v(num) - v(den) + eps*delta
// where delta is the generic radius perturbation (0 on the sphere, +1 strictly
// inside, -1 strictly outside), guarded by cond.
struct AVal {
    FormulaPtr cond;
    Polynomial num;
    Polynomial den;
    int eps = 0;
};

std::vector<AVal> ball_side_cases(const std::vector<Polynomial>& cs, const TestPoint& tp) {
    std::vector<AVal> out;
    const Polynomial one = Polynomial::integer(1);
    const Polynomial b2 = cs[0];
    const Polynomial a2 = cs.size() > 1 ? cs[1] : Polynomial{};
    if (a2.is_zero()) {
        out.push_back({f_true(), b2, one, 0});
        return out;
    }
    const int dc = tp.rel == TestPoint::RadiusRel::EqualTo
                       ? 0
                       : (tp.rel == TestPoint::RadiusRel::StrictlyInside ? +1 : -1);
    // Degenerate parameter regime: the leading coefficient vanishes.
    FormulaPtr az = order_formula(a2, Sigma::EqZero);
    if (!is_false_const(az)) out.push_back({std::move(az), b2, one, 0});
    const FormulaPtr anz = order_formula(a2, Sigma::NeqZero);
    // s(x) = a2*(x - r_s) with r_s = -b2/a2; v(x - r_s) compares the point's
    // distance-from-center rho + dc*delta against d = v(center - r_s).
    const Polynomial e = tp.num * a2 + b2 * tp.den;  // numerator of center - r_s
    const Polynomial f = tp.den * a2;                // its denominator
    const Polynomial pf = tp.rad_num * f;            // cross products for rho vs d
    const Polynomial eq = e * tp.rad_den;
    FormulaPtr near_cond;   // the point's own radius dominates
    FormulaPtr far_cond;    // the distance to the other center dominates
    if (dc == 0) {
        near_cond = value_formula(pf, eq, Rho::Le);
        far_cond = value_formula(eq, pf, Rho::Lt);
    } else if (dc > 0) {
        near_cond = value_formula(pf, eq, Rho::Lt);
        far_cond = value_formula(eq, pf, Rho::Le);
    } else {
        near_cond = value_formula(pf, eq, Rho::Le);
        far_cond = value_formula(eq, pf, Rho::Lt);
    }
    out.push_back({fold_and(anz, std::move(near_cond)), a2 * tp.rad_num, tp.rad_den, dc});
    out.push_back({fold_and(anz, std::move(far_cond)), a2 * e, f, 0});
    return out;
}

FormulaPtr compare_avals(const AVal& lhs, const AVal& rhs, Rho rho) {
    const Polynomial l = lhs.num * rhs.den;
    const Polynomial r = rhs.num * lhs.den;
    const int de = lhs.eps - rhs.eps;
    if (de == 0) return value_formula(l, r, rho);
    if (rho == Rho::Eq) return f_false();
    // A generic infinitesimal tilt breaks ties; only the base parts compete.
    return value_formula(l, r, de > 0 ? Rho::Lt : Rho::Le);
}

FormulaPtr subst_ball_value(const ValueAtom& atom, const std::string& var,
                            const TestPoint& tp) {
    const auto pcs = atom.p.coeffs_in(var);
    const auto qcs = atom.q.coeffs_in(var);
    if (pcs.size() > 2 || qcs.size() > 2) {
        throw TableMiss("ball substitution needs degree <= 1 in " + var);
    }
    const auto pcases = ball_side_cases(pcs, tp);
    const auto qcases = ball_side_cases(qcs, tp);
    std::vector<FormulaPtr> parts;
    for (const auto& cp : pcases) {
        for (const auto& cq : qcases) {
            parts.push_back(fold_and(cp.cond,
                                     fold_and(cq.cond, compare_avals(cp, cq, atom.rho))));
        }
    }
    return fold_or_all(parts);
}

// A generic sphere point never solves a nondegenerate linear equation.
FormulaPtr subst_ball_order(const OrderAtom& atom, const std::string& var) {
    const auto cs = atom.p.coeffs_in(var);
    if (cs.size() > 2) throw TableMiss("ball substitution needs degree <= 1 in " + var);
    const Polynomial b2 = cs[0];
    const Polynomial a2 = cs.size() > 1 ? cs[1] : Polynomial{};
    switch (atom.sigma) {
        case Sigma::EqZero:
            return fold_and(order_formula(a2, Sigma::EqZero),
                            order_formula(b2, Sigma::EqZero));
        case Sigma::NeqZero:
            return fold_or(order_formula(a2, Sigma::NeqZero),
                           order_formula(b2, Sigma::NeqZero));
        default:
            throw TableMiss("ball substitution covers no field-order inequalities");
    }
}

}  // namespace

FormulaPtr substitute_virtual(const NormalizedAtom& atom, const std::string& var,
                              const TestPoint& tp) {
    if (const auto* oa = std::get_if<OrderAtom>(&atom)) {
        if (!oa->p.contains_var(var)) return order_formula(oa->p, oa->sigma);
        switch (tp.kind) {
            case TestPoint::Kind::FiniteTerm: return subst_finite_order(*oa, var, tp);
            case TestPoint::Kind::PlusInfinity: return subst_infinity_order(*oa, var, true);
            case TestPoint::Kind::MinusInfinity:
                return subst_infinity_order(*oa, var, false);
            case TestPoint::Kind::RootExpression: return subst_root_order(*oa, var, tp);
            case TestPoint::Kind::EpsilonAbove:
                return subst_epsilon_order(*oa, var, tp, true);
            case TestPoint::Kind::EpsilonBelow:
                return subst_epsilon_order(*oa, var, tp, false);
            case TestPoint::Kind::BallPoint: return subst_ball_order(*oa, var);
        }
    }
    const auto& va = std::get<ValueAtom>(atom);
    if (!va.p.contains_var(var) && !va.q.contains_var(var)) {
        return value_formula(va.p, va.q, va.rho);
    }
    switch (tp.kind) {
        case TestPoint::Kind::FiniteTerm: return subst_finite_value(va, var, tp);
        case TestPoint::Kind::BallPoint: return subst_ball_value(va, var, tp);
        default:
            throw TableMiss("valuation atoms substitute only at finite and ball points");
    }
}

}  // namespace qrc
