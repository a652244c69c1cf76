#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrc/formula.hpp"
#include "qrc/laurent.hpp"
#include "qrc/ratfunc.hpp"
#include "qrc/rng.hpp"
#include "qrc/theory.hpp"
#include "qrc/truth.hpp"

namespace qrc {

// The two computable models: M_R is Q(t) ordered with t positive
// infinitesimal and valued t-adically (an ordered field with compatible
// valuation); M_A is truncated Laurent series where both relations are the
// t-adic quasi-order (valuation-induced).
struct ModelDescriptor {
    enum class Tag { MR, MA };
    Tag tag = Tag::MR;
    int precision = 24;  // Laurent window length for M_A sampling/witnesses

    static ModelDescriptor mr() { return {Tag::MR, 24}; }
    static ModelDescriptor ma(int precision = 24) { return {Tag::MA, precision}; }
};

using ModelElem = std::variant<RatFuncElem, LaurentElem>;
using Assignment = std::map<std::string, ModelElem>;

std::string elem_str(const ModelElem& e);

// Term evaluation under an assignment; MissingAssignment for unbound vars.
ModelElem eval_term(const ModelDescriptor& m, const TermPtr& t, const Assignment& env);

// Three-valued evaluation of a quantifier-free formula. In M_R results are
// always determinate.
TruthValue eval_qf(const ModelDescriptor& m, const FormulaPtr& f, const Assignment& env);

enum class Dichotomy { Ordering, Valuation };
// Evaluates 0 < -1 in the model: false -> Ordering, true -> Valuation.
Dichotomy classify_dichotomy(const ModelDescriptor& m);

// Deterministic pseudo-random element: degrees/orders within size_bound,
// integer coefficients in [-size_bound, size_bound], nonzero denominator.
// M_A elements are exact Laurent polynomials (finite series are exactly
// known); finite precision enters through inverses and square roots.
ModelElem sample(const ModelDescriptor& m, std::uint64_t seed, int size_bound);
// Streaming variant used by the conformance harness.
ModelElem sample_elem(const ModelDescriptor& m, Rng& rng, int size_bound);

struct AxiomReport {
    std::string name;
    long instances = 0;
    long violations = 0;
    long skipped_indeterminate = 0;  // still indeterminate after retries
    long witness_missing = 0;        // expected model incompleteness
    std::string first_counterexample;
};

struct ConformanceReport {
    std::vector<AxiomReport> axioms;
    long total_violations() const {
        long v = 0;
        for (const auto& a : axioms) v += a.violations;
        return v;
    }
};

// Samples universal prefixes; existential subformulas are handled only for
// axioms with registered witness constructors (multiplicative inverse,
// non-triviality, square root via series_sqrt in M_A), otherwise
// UnsupportedQuantifierShape. Indeterminate M_A instances are redrawn at
// doubled precision up to 3 times, then counted as skipped. For M_R the
// report includes the named natural-valuation check (the convex hull of the
// integers is exactly the t-adic valuation ring).
ConformanceReport check_axioms_sampled(const ModelDescriptor& m,
                                       const std::vector<NamedAxiom>& axioms, long n,
                                       std::uint64_t seed, int size_bound = 2);

}  // namespace qrc
