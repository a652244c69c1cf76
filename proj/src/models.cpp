#include "qrc/models.hpp"

#include <functional>

#include "qrc/errors.hpp"
#include "qrc/polynomial.hpp"

namespace qrc {

// ---------------------------------------------------------------------------
// RatFuncElem

void RatFuncElem::reduce() {
    if (den_.is_zero()) throw ZeroInput("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly<Rational>::constant(Rational(1));
        return;
    }
    UPoly<Rational> g = upoly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Rational c = den_.trailing();
    num_ = num_.scaled(Rational(1) / c);
    den_ = den_.scaled(Rational(1) / c);
}

RatFuncElem::RatFuncElem(UPoly<Rational> num, UPoly<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

RatFuncElem RatFuncElem::from_rational(const Rational& c) {
    return RatFuncElem(UPoly<Rational>::constant(c), UPoly<Rational>::constant(Rational(1)));
}

RatFuncElem RatFuncElem::t() {
    return RatFuncElem(UPoly<Rational>::x(), UPoly<Rational>::constant(Rational(1)));
}

VOrd RatFuncElem::vord() const {
    if (num_.is_zero()) return VOrd::infinite();
    return VOrd::known(num_.ord() - den_.ord());
}

RatFuncElem RatFuncElem::operator-() const {
    RatFuncElem e = *this;
    e.num_ = -e.num_;
    return e;
}

RatFuncElem operator+(const RatFuncElem& a, const RatFuncElem& b) {
    return RatFuncElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFuncElem operator-(const RatFuncElem& a, const RatFuncElem& b) { return a + (-b); }
RatFuncElem operator*(const RatFuncElem& a, const RatFuncElem& b) {
    return RatFuncElem(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncElem RatFuncElem::recip() const {
    if (num_.is_zero()) throw ZeroInput("reciprocal of zero");
    return RatFuncElem(den_, num_);
}

Rational RatFuncElem::value_at_zero() const {
    if (num_.is_zero()) return Rational(0);
    long a = num_.ord(), b = den_.ord();
    if (a < b) throw Error("value_at_zero: negative valuation");
    if (a > b) return Rational(0);
    return num_.coeff(static_cast<std::size_t>(a)) / den_.coeff(static_cast<std::size_t>(b));
}

namespace {

std::string tpoly_str(const UPoly<Rational>& p) {
    std::vector<Polynomial> cs;
    for (const auto& c : p.coeffs()) cs.push_back(Polynomial::constant(c));
    if (cs.empty()) cs.push_back(Polynomial());
    return Polynomial::from_coeffs(cs, "t").str();
}

}  // namespace

std::string RatFuncElem::str() const { return tpoly_str(num_) + " / " + tpoly_str(den_); }

// ---------------------------------------------------------------------------
// Evaluation

std::string elem_str(const ModelElem& e) {
    if (std::holds_alternative<RatFuncElem>(e)) return std::get<RatFuncElem>(e).str();
    return std::get<LaurentElem>(e).str();
}

namespace {

RatFuncElem eval_term_mr(const TermPtr& t, const Assignment& env) {
    switch (t->kind) {
        case TermKind::Constant: return RatFuncElem::from_rational(Rational(t->value));
        case TermKind::Variable: {
            auto it = env.find(t->name);
            if (it == env.end()) throw MissingAssignment("no value for " + t->name);
            return std::get<RatFuncElem>(it->second);
        }
        case TermKind::Neg: return -eval_term_mr(t->lhs, env);
        case TermKind::Add: return eval_term_mr(t->lhs, env) + eval_term_mr(t->rhs, env);
        case TermKind::Mul: return eval_term_mr(t->lhs, env) * eval_term_mr(t->rhs, env);
    }
    throw Error("eval_term: bad kind");
}

LaurentElem eval_term_ma(const TermPtr& t, const Assignment& env) {
    switch (t->kind) {
        case TermKind::Constant: return LaurentElem::from_rational(Rational(t->value));
        case TermKind::Variable: {
            auto it = env.find(t->name);
            if (it == env.end()) throw MissingAssignment("no value for " + t->name);
            return std::get<LaurentElem>(it->second);
        }
        case TermKind::Neg: return -eval_term_ma(t->lhs, env);
        case TermKind::Add: return eval_term_ma(t->lhs, env) + eval_term_ma(t->rhs, env);
        case TermKind::Mul: return eval_term_ma(t->lhs, env) * eval_term_ma(t->rhs, env);
    }
    throw Error("eval_term: bad kind");
}

TruthValue atom_eval_mr(Rel r, const RatFuncElem& a, const RatFuncElem& b) {
    switch (r) {
        case Rel::Eq: return tv(a == b);
        case Rel::Neq: return tv(!(a == b));
        case Rel::Le: return tv((b - a).sgn() >= 0);
        case Rel::Lt: return tv((b - a).sgn() > 0);
        case Rel::Sim: return tv((b - a).sgn() == 0);
        case Rel::LeV: return vord_le(b.vord(), a.vord());
        case Rel::LtV: return vord_lt(b.vord(), a.vord());
        case Rel::SimV: return vord_eq(a.vord(), b.vord());
    }
    throw Error("atom_eval: bad relation");
}

// In M_A both relation families are the valuation quasi-order; only = / !=
// compare elements coefficient-wise.
TruthValue atom_eval_ma(Rel r, const LaurentElem& a, const LaurentElem& b) {
    switch (r) {
        case Rel::Eq: return equal3(a, b);
        case Rel::Neq: return tv_not(equal3(a, b));
        case Rel::Le:
        case Rel::LeV: return vord_le(b.vord(), a.vord());
        case Rel::Lt:
        case Rel::LtV: return vord_lt(b.vord(), a.vord());
        case Rel::Sim:
        case Rel::SimV: return vord_eq(a.vord(), b.vord());
    }
    throw Error("atom_eval: bad relation");
}

}  // namespace

ModelElem eval_term(const ModelDescriptor& m, const TermPtr& t, const Assignment& env) {
    if (m.tag == ModelDescriptor::Tag::MR) return eval_term_mr(t, env);
    return eval_term_ma(t, env);
}

TruthValue eval_qf(const ModelDescriptor& m, const FormulaPtr& f, const Assignment& env) {
    switch (f->kind) {
        case FKind::Atom: {
            if (m.tag == ModelDescriptor::Tag::MR)
                return atom_eval_mr(f->rel, eval_term_mr(f->t1, env), eval_term_mr(f->t2, env));
            return atom_eval_ma(f->rel, eval_term_ma(f->t1, env), eval_term_ma(f->t2, env));
        }
        case FKind::Not: return tv_not(eval_qf(m, f->a, env));
        case FKind::And: return tv_and(eval_qf(m, f->a, env), eval_qf(m, f->b, env));
        case FKind::Or: return tv_or(eval_qf(m, f->a, env), eval_qf(m, f->b, env));
        case FKind::Implies:
            return tv_or(tv_not(eval_qf(m, f->a, env)), eval_qf(m, f->b, env));
        case FKind::Iff: {
            TruthValue a = eval_qf(m, f->a, env), b = eval_qf(m, f->b, env);
            return tv_or(tv_and(a, b), tv_and(tv_not(a), tv_not(b)));
        }
        case FKind::Exists:
        case FKind::Forall:
            throw Error("eval_qf: formula is not quantifier-free");
    }
    throw Error("eval_qf: bad kind");
}

Dichotomy classify_dichotomy(const ModelDescriptor& m) {
    FormulaPtr probe = f_atom(Rel::Lt, Term::constant(0), Term::neg(Term::constant(1)));
    TruthValue r = eval_qf(m, probe, {});
    return r == TruthValue::True ? Dichotomy::Valuation : Dichotomy::Ordering;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

UPoly<Rational> random_tpoly(Rng& rng, int size, bool nonzero) {
    for (;;) {
        long deg = static_cast<long>(rng.range(0, size));
        std::vector<Rational> cs;
        for (long i = 0; i <= deg; ++i)
            cs.push_back(Rational(static_cast<long>(rng.range(-size, size))));
        UPoly<Rational> p(cs);
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

ModelElem sample_elem(const ModelDescriptor& m, Rng& rng, int size_bound) {
    if (m.tag == ModelDescriptor::Tag::MR) {
        UPoly<Rational> num = random_tpoly(rng, size_bound, false);
        UPoly<Rational> den = random_tpoly(rng, size_bound, true);
        return RatFuncElem(num, den);
    }
    // Exact Laurent polynomials with exponents in [-size_bound, size_bound]:
    // small finite series are exactly known members of the carrier, so
    // truncation (finite known_until) enters only through inverses and roots.
    long order = static_cast<long>(rng.range(-size_bound, size_bound));
    std::vector<Rational> cs;
    long lead = 0;
    while (lead == 0) lead = static_cast<long>(rng.range(-size_bound, size_bound));
    cs.push_back(Rational(lead));
    for (long e = order + 1; e <= size_bound; ++e)
        cs.push_back(Rational(static_cast<long>(rng.range(-size_bound, size_bound))));
    return LaurentElem::make(order, std::move(cs), LaurentElem::kExact);
}

ModelElem sample(const ModelDescriptor& m, std::uint64_t seed, int size_bound) {
    Rng rng(seed);
    return sample_elem(m, rng, size_bound);
}

// ---------------------------------------------------------------------------
// Axiom conformance

namespace {

struct WitnessMissingSignal {};

// Per-axiom existential handlers. A handler produces the witness element for
// the bound variable, throws WitnessMissingSignal for expected model
// incompleteness, or throws ZeroInput-style errors treated as indeterminate.
using WitnessFn = std::function<ModelElem(const ModelDescriptor&, const Assignment&)>;

ModelElem elem_recip(const ModelElem& e) {
    if (std::holds_alternative<RatFuncElem>(e)) return std::get<RatFuncElem>(e).recip();
    return std::get<LaurentElem>(e).recip();
}

std::optional<WitnessFn> witness_for(const std::string& axiom, const ModelDescriptor& m) {
    if (axiom == "mul-inverse")
        return WitnessFn([](const ModelDescriptor&, const Assignment& env) {
            return elem_recip(env.at("x"));
        });
    if (axiom == "non-triviality")
        return WitnessFn([](const ModelDescriptor& md, const Assignment&) -> ModelElem {
            if (md.tag == ModelDescriptor::Tag::MR) return RatFuncElem::t();
            return LaurentElem::t();
        });
    if (axiom == "sqrt" && m.tag == ModelDescriptor::Tag::MA)
        return WitnessFn([](const ModelDescriptor& md, const Assignment& env) -> ModelElem {
            const auto& x = std::get<LaurentElem>(env.at("x"));
            try {
                return series_sqrt(x, md.precision);
            } catch (const NoSquareRoot&) {
                throw WitnessMissingSignal{};
            }
        });
    return std::nullopt;
}

struct InstanceChecker {
    const ModelDescriptor& m;
    Rng& rng;
    int size_bound;
    const std::string& axiom_name;
    Assignment env;
    std::vector<std::string> binds;

    TruthValue walk(const FormulaPtr& f) {
        switch (f->kind) {
            case FKind::Atom:
                return eval_qf(m, f, env);
            case FKind::Not:
                return tv_not(walk(f->a));
            case FKind::And:
                return tv_and(walk(f->a), walk(f->b));
            case FKind::Or:
                return tv_or(walk(f->a), walk(f->b));
            case FKind::Implies: {
                TruthValue l = walk(f->a);
                if (l == TruthValue::False) return TruthValue::True;
                return tv_or(tv_not(l), walk(f->b));
            }
            case FKind::Iff: {
                TruthValue a = walk(f->a), b = walk(f->b);
                return tv_or(tv_and(a, b), tv_and(tv_not(a), tv_not(b)));
            }
            case FKind::Forall: {
                ModelElem e = sample_elem(m, rng, size_bound);
                binds.push_back(f->var + " = " + elem_str(e));
                auto saved = bind(f->var, e);
                TruthValue r = walk(f->a);
                restore(f->var, saved);
                return r;
            }
            case FKind::Exists: {
                auto fn = witness_for(axiom_name, m);
                if (!fn)
                    throw UnsupportedQuantifierShape(
                        "axiom " + axiom_name + " has an unregistered existential quantifier");
                ModelElem w = [&]() -> ModelElem {
                    try {
                        return (*fn)(m, env);
                    } catch (const ZeroInput&) {
                        throw IndetSignal{};
                    }
                }();
                binds.push_back(f->var + " = " + elem_str(w));
                auto saved = bind(f->var, w);
                TruthValue r = walk(f->a);
                restore(f->var, saved);
                return r;
            }
        }
        throw Error("walk: bad kind");
    }

    struct IndetSignal {};

    std::optional<ModelElem> bind(const std::string& var, const ModelElem& e) {
        std::optional<ModelElem> old;
        auto it = env.find(var);
        if (it != env.end()) old = it->second;
        env[var] = e;
        return old;
    }
    void restore(const std::string& var, const std::optional<ModelElem>& old) {
        if (old) env[var] = *old;
        else env.erase(var);
    }
};

void check_one_axiom(const ModelDescriptor& base, const NamedAxiom& axiom, long n,
                     std::uint64_t seed, int size_bound, AxiomReport& rep) {
    Rng rng(seed);
    const int max_attempts = base.tag == ModelDescriptor::Tag::MA ? 4 : 1;
    for (long i = 0; i < n; ++i) {
        ++rep.instances;
        bool settled = false;
        for (int attempt = 0; attempt < max_attempts && !settled; ++attempt) {
            ModelDescriptor m = base;
            m.precision = base.precision << attempt;
            InstanceChecker checker{m, rng, size_bound, axiom.name, {}, {}};
            try {
                TruthValue r = checker.walk(axiom.formula);
                if (r == TruthValue::True) {
                    settled = true;
                } else if (r == TruthValue::False) {
                    ++rep.violations;
                    if (rep.first_counterexample.empty()) {
                        std::string cx;
                        for (const auto& b : checker.binds)
                            cx += (cx.empty() ? "" : ", ") + b;
                        rep.first_counterexample = cx;
                    }
                    settled = true;
                }
            } catch (const WitnessMissingSignal&) {
                ++rep.witness_missing;
                settled = true;
            } catch (const InstanceChecker::IndetSignal&) {
                // fall through to retry at doubled precision
            }
        }
        if (!settled) ++rep.skipped_indeterminate;
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void natural_valuation_check(long n, std::uint64_t seed, int size_bound, AxiomReport& rep) {
    Rng rng(seed);
    long bound = size_bound + 1;
    RatFuncElem big = RatFuncElem::from_rational(Rational(bound));
    for (long i = 0; i < n; ++i) {
        ++rep.instances;
        RatFuncElem r = std::get<RatFuncElem>(
            sample_elem(ModelDescriptor::mr(), rng, size_bound));
        VOrd v = r.vord();
        bool nonneg = v.kind == VOrd::Kind::Infinite || v.k >= 0;
        bool ok;
        if (nonneg) {
            // Witness n0 = floor(|r(0)|) + 1 must bound r on both sides.
            Rational at0 = rat_abs(r.value_at_zero());
            Integer fl = at0.get_num() / at0.get_den();
            RatFuncElem n0 = RatFuncElem::from_rational(Rational(fl) + 1);
            ok = (r - (-n0)).sgn() >= 0 && (n0 - r).sgn() >= 0;
        } else {
            // Infinite elements escape every integer bound.
            ok = (r + big).sgn() < 0 || (big - r).sgn() < 0;
        }
        if (!ok) {
            ++rep.violations;
            if (rep.first_counterexample.empty())
                rep.first_counterexample = "r = " + r.str();
        }
    }
}

}  // namespace

ConformanceReport check_axioms_sampled(const ModelDescriptor& m,
                                       const std::vector<NamedAxiom>& axioms, long n,
                                       std::uint64_t seed, int size_bound) {
    ConformanceReport report;
    for (const auto& ax : axioms) {
        AxiomReport rep;
        rep.name = ax.name;
        check_one_axiom(m, ax, n, seed ^ fnv1a(ax.name), size_bound, rep);
        report.axioms.push_back(std::move(rep));
    }
    if (m.tag == ModelDescriptor::Tag::MR) {
        AxiomReport rep;
        rep.name = "natural-valuation";
        natural_valuation_check(n, seed ^ fnv1a(rep.name), size_bound, rep);
        report.axioms.push_back(std::move(rep));
    }
    return report;
}

}  // namespace qrc
