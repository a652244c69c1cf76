#pragma once

#include "qrc/formula.hpp"
#include "qrc/rng.hpp"

namespace qrc {

// Random AST generators for round-trip and differential testing.
TermPtr random_term(Rng& rng, int depth);
FormulaPtr random_formula(Rng& rng, int depth);
// Quantifier-free, atoms only over the given variables.
FormulaPtr random_qf_formula(Rng& rng, int depth, const std::vector<std::string>& vars);

}  // namespace qrc
