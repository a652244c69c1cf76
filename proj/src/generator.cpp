#include "qrc/generator.hpp"

namespace qrc {
namespace {

// All two-child builders sequence their recursive calls through locals:
// C++ argument evaluation order is unspecified, and the streams must be
// reproducible across compilers.

const std::vector<std::string> kVarPool = {"x", "y", "z", "u", "w", "v"};

TermPtr random_term_from(Rng& rng, int depth, const std::vector<std::string>& vars) {
    if (depth <= 0 || rng.below(3) == 0) {
        if (rng.coin()) return Term::constant(Integer(static_cast<long>(rng.range(0, 5))));
        return Term::variable(rng.pick(vars));
    }
    unsigned long k = rng.below(4);
    TermPtr a = random_term_from(rng, depth - 1, vars);
    if (k == 3) return Term::neg(a);
    TermPtr b = random_term_from(rng, depth - 1, vars);
    switch (k) {
        case 0: return Term::add(a, b);
        case 1: return Term::sub(a, b);
        default: return Term::mul(a, b);
    }
}

Rel random_rel(Rng& rng) {
    static const Rel rels[] = {Rel::Eq, Rel::Neq, Rel::Le, Rel::Lt,
                               Rel::Sim, Rel::LeV, Rel::LtV, Rel::SimV};
    return rels[rng.below(8)];
}

FormulaPtr random_atom(Rng& rng, int tdepth, const std::vector<std::string>& vars) {
    Rel r = random_rel(rng);
    TermPtr t1 = random_term_from(rng, tdepth, vars);
    TermPtr t2 = random_term_from(rng, tdepth, vars);
    return f_atom(r, t1, t2);
}

}  // namespace

TermPtr random_term(Rng& rng, int depth) { return random_term_from(rng, depth, kVarPool); }

FormulaPtr random_formula(Rng& rng, int depth) {
    if (depth <= 0 || rng.below(4) == 0) return random_atom(rng, 2, kVarPool);
    unsigned long k = rng.below(8);
    switch (k) {
        case 0: return f_not(random_formula(rng, depth - 1));
        case 1:
        case 2:
        case 3:
        case 4: {
            FormulaPtr a = random_formula(rng, depth - 1);
            FormulaPtr b = random_formula(rng, depth - 1);
            if (k == 1) return f_and(a, b);
            if (k == 2) return f_or(a, b);
            if (k == 3) return f_implies(a, b);
            return f_iff(a, b);
        }
        case 5:
        case 6: {
            std::string var = rng.pick(kVarPool);
            FormulaPtr body = random_formula(rng, depth - 1);
            return k == 5 ? f_exists(var, body) : f_forall(var, body);
        }
        default: return random_atom(rng, 2, kVarPool);
    }
}

FormulaPtr random_qf_formula(Rng& rng, int depth, const std::vector<std::string>& vars) {
    if (depth <= 0 || rng.below(3) == 0) return random_atom(rng, 1, vars);
    unsigned long k = rng.below(4);
    switch (k) {
        case 0: return f_not(random_qf_formula(rng, depth - 1, vars));
        case 1:
        case 2: {
            FormulaPtr a = random_qf_formula(rng, depth - 1, vars);
            FormulaPtr b = random_qf_formula(rng, depth - 1, vars);
            return k == 1 ? f_and(a, b) : f_or(a, b);
        }
        default: return random_atom(rng, 1, vars);
    }
}

}  // namespace qrc
