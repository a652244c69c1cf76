#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrc/formula.hpp"
#include "qrc/laurent.hpp"
#include "qrc/models.hpp"
#include "qrc/ratfunc.hpp"
#include "qrc/upoly.hpp"

namespace qrc {

// Ordered-field sign, shared by the base fields Q and Q(t) (the latter with
// t a positive infinitesimal).
inline int field_sign(const Rational& x) { return sign(x); }
inline int field_sign(const RatFuncElem& x) { return x.sgn(); }

// f with repeated roots removed: f / gcd(f, f').
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f);

// Tarski query over the half-open interval (lo, hi], endpoints in the base
// field or infinite (nullopt): #{roots r of f in the real closure with
// g(r) > 0} - #{with g(r) < 0}. Sign counts use right limits, so interval
// additivity (a,b] + (b,c] = (a,c] holds even when b is a root. g = 1 counts
// roots. Throws ZeroPolynomial on zero f.
template <class F>
long sturm_tarski(const UPoly<F>& f, const UPoly<F>& g,
                  const std::optional<F>& lo = std::nullopt,
                  const std::optional<F>& hi = std::nullopt);

// One sign condition on a univariate polynomial.
template <class F>
struct ExistsAtom {
    UPoly<F> p;
    OrderAtom::Sigma sigma;
};

// Decides "exists x in the real closure of the base field satisfying every
// atom". General degrees go through Sturm root isolation by bisection with
// base-field midpoints (cells tested by Tarski query, gaps by base-field
// sample points); when every polynomial has degree <= 2 the roots are
// handled exactly in quadratic extensions instead, which also covers root
// clusters closer than any base-field element (infinitesimal separations
// over Q(t)) that bisection cannot split. Throws BudgetExceeded when
// bisection hits its depth cap.
template <class F>
bool decide_exists_order(const std::vector<ExistsAtom<F>>& atoms);

struct NewtonSegment {
    Rational slope;
    long length = 0;  // horizontal extent; root-value multiplicity
};

// Lower hull of (i, v(coeff_i)); slopes strictly increasing. Root values of
// the polynomial over the valued closure are the negated slopes; x = 0 roots
// are counted by zero_root_multiplicity. Sum of lengths plus the zero-root
// count equals the degree.
struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    long zero_root_multiplicity = 0;
};

// coeffs ascending in x. Throws ZeroPolynomial when no coefficient is known
// nonzero, PrecisionExhausted when an indeterminate coefficient could change
// the hull.
NewtonPolygon newton_polygon(const std::vector<LaurentElem>& coeffs);

// Newton iteration from a simple residue root r0 of f mod t: returns r with
// r = r0 mod t and f(r) = 0 mod t^precision (exact when the iteration lands
// on an exact root). coeffs ascending, each of order >= 0. Throws
// NotSimpleResidueRoot when f(r0) != 0 or f'(r0) = 0 mod t.
LaurentElem hensel_lift(const std::vector<LaurentElem>& coeffs, const Rational& r0,
                        long precision);

struct EquivReport {
    bool pass = true;
    long checked = 0;  // instances with a determinate comparison
    long skipped = 0;  // indeterminate after the retry policy
    std::string counterexample;  // first differing assignment, empty on pass
};

// Samples n assignments and compares determinate truth values of phi and
// psi; indeterminate draws are retried at doubled precision up to 3 times,
// then counted as skipped. Throws FreeVariableMismatch when the free
// variable sets differ, Error when either formula is quantified.
EquivReport qf_equiv_sample(const ModelDescriptor& m, const FormulaPtr& phi,
                            const FormulaPtr& psi, long n, std::uint64_t seed);

}  // namespace qrc
