#pragma once

#include "qrc/formula.hpp"

namespace qrc {

// Rewrites into negation-normal form over the positive atom alphabet
// {=, !=, <=, <, <=v, <v}: implications and iff are eliminated, ~ and ~v are
// expanded into conjunctions of weak atoms, negations are pushed onto atoms
// and resolved by totality (the strict relations < and <v act as the tagged
// negations of <= and <=v). Bound variables are alpha-renamed to var$0,
// var$1, ... in traversal order, skipping names free in the input.
// Idempotent; preserves free variables and satisfaction.
FormulaPtr normalize(const FormulaPtr& f);

}  // namespace qrc
