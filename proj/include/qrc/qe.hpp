#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qrc/formula.hpp"
#include "qrc/theory.hpp"

namespace qrc {

struct EliminationConfig {
    int max_degree = 2;      // per quantified variable; must be 1 or 2
    long max_atoms = 20000;  // budget on intermediate formula size (atom count)
    bool simplify = true;
};

// A symbolic test point for virtual substitution. Every point carries the
// guard under which it is well defined; substituting a point into an atom
// yields a parameter formula that is correct exactly on assignments
// satisfying the guard (the elimination driver conjoins the guard per
// disjunct).
struct TestPoint {
    enum class Kind {
        FiniteTerm,      // num/den with den != 0 guard
        PlusInfinity,
        MinusInfinity,
        RootExpression,  // (-b + sign*sqrt(b^2-4ac))/(2a); guard a != 0 & disc >= 0
        EpsilonAbove,    // base + epsilon, epsilon positive infinitesimal
        EpsilonBelow,    // base - epsilon
        BallPoint,       // generic point at a prescribed distance from a center
    };
    // For BallPoint: how v(x - center) relates to the reference radius
    // v(rad_num) - v(rad_den). StrictlyInside means strictly larger value
    // (deeper into the ball), StrictlyOutside strictly smaller value.
    enum class RadiusRel { EqualTo, StrictlyInside, StrictlyOutside };

    Kind kind = Kind::FiniteTerm;
    Polynomial num, den;  // FiniteTerm value; also the BallPoint center
    Polynomial a, b, c;   // RootExpression coefficients
    int sign = +1;        // RootExpression branch
    std::shared_ptr<const TestPoint> base;  // EpsilonAbove/EpsilonBelow
    Polynomial rad_num, rad_den;            // BallPoint reference radius
    RadiusRel rel = RadiusRel::EqualTo;
    // Centers the generic BallPoint direction must dodge (realizable because
    // the residue field of the valued branch is infinite).
    std::vector<std::pair<Polynomial, Polynomial>> avoid;

    FormulaPtr guard;  // well-definedness condition over the parameters

    static TestPoint finite(Polynomial num, Polynomial den);
    static TestPoint plus_infinity();
    static TestPoint minus_infinity();
    static TestPoint root(Polynomial a, Polynomial b, Polynomial c, int sign);
    static TestPoint eps_above(TestPoint base);
    static TestPoint eps_below(TestPoint base);
    static TestPoint ball(Polynomial center_num, Polynomial center_den, Polynomial rad_num,
                          Polynomial rad_den, RadiusRel rel,
                          std::vector<std::pair<Polynomial, Polynomial>> avoid);
};

// Substitute tp for var in a single atom; the result is quantifier-free,
// does not contain var, and is valid under tp.guard. Order atoms accept
// finite terms, infinities, root expressions and epsilon shifts; value atoms
// accept finite terms and ball points. Throws TableMiss for uncovered
// combinations and UnsupportedFragment when the degree of var exceeds the
// table for the point kind.
FormulaPtr substitute_virtual(const NormalizedAtom& a, const std::string& var,
                              const TestPoint& tp);

struct GuardedResult {
    FormulaPtr acvf_part;
    FormulaPtr rcvf_part;
};

// Quantifier elimination within the supported fragments of one branch.
// The result has no quantifiers, its free variables are a subset of the
// input's, and it is equivalent to the input in every model of the branch
// theory. Quantifiers are eliminated innermost first; universal quantifiers
// via the double negation of an existential.
FormulaPtr eliminate(const FormulaPtr& f, Branch b, const EliminationConfig& cfg = {});

// Both branches side by side; errors are labeled with the branch they
// occurred in.
GuardedResult eliminate_guarded(const FormulaPtr& f, const EliminationConfig& cfg = {});

// Single formula (0 < -1 & acvf_part) | (-1 < 0 & rcvf_part), with constant
// parts folded away.
FormulaPtr guarded_formula(const GuardedResult& r);

// Branch-aware quantifier-free simplification: flattening, canonical atom
// forms, unit/complement folding, duplicate and subsumed-disjunct removal.
// Folds are restricted to what holds in every model of the branch (in the
// valued branch, nonzero integers other than +-1 are never assumed nonzero,
// so mixed-characteristic completions stay sound).
FormulaPtr simplify_qf(Branch b, const FormulaPtr& f);

// Decide a sentence: eliminate under cc.branch, then evaluate the ground
// result under the completion cc. Throws NotASentence on free variables.
bool decide_sentence(const FormulaPtr& s, const CompletionConfig& cc,
                     const EliminationConfig& cfg = {});

}  // namespace qrc
