#pragma once

#include <string>
#include <vector>

#include "qrc/formula.hpp"
#include "qrc/qe.hpp"

namespace qrc {
namespace qe_detail {

// Atom constructors for the elimination pipeline. Unlike the surface
// normalizer these never rescale equations by integer content: dividing
// p = 0 by an integer is not an equivalence in mixed characteristic. Only
// the sign is normalized (a unit in every field). Constant atoms fold to
// true/false when the fold holds in every field: value 0, or value +-1 for
// equations.
FormulaPtr order_formula(Polynomial p, OrderAtom::Sigma sigma);
FormulaPtr value_formula(Polynomial p, Polynomial q, ValueAtom::Rho rho);

// Connectives with true/false unit folding.
FormulaPtr fold_and(FormulaPtr a, FormulaPtr b);
FormulaPtr fold_or(FormulaPtr a, FormulaPtr b);
FormulaPtr fold_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr fold_or_all(const std::vector<FormulaPtr>& fs);

long atom_count(const FormulaPtr& f);

// Fragment eliminators for one existential quantifier over one conjunction.
// xatoms contains exactly the atoms mentioning var; the caller conjoins
// pass-through atoms. Results are parameter formulas.

// Order virtual substitution (RCVF; order atoms, degree <= 2).
FormulaPtr eliminate_fragment_a(const std::string& var, const std::vector<OrderAtom>& xatoms,
                                const EliminationConfig& cfg);

// Parametric common-root analysis (ACVF; =/!= atoms, degree <= 2).
FormulaPtr eliminate_fragment_b(const std::string& var, const std::vector<OrderAtom>& xatoms,
                                const EliminationConfig& cfg);

// Ultrametric ball-point substitution (ACVF; linear value atoms and linear
// equations).
FormulaPtr eliminate_fragment_c(const std::string& var,
                                const std::vector<NormalizedAtom>& xatoms,
                                const EliminationConfig& cfg);

}  // namespace qe_detail
}  // namespace qrc
