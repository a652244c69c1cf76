#pragma once

#include <string>

#include "qrc/formula.hpp"

namespace qrc {

// Recursive-descent parser for the surface syntax. Throws SyntaxError with
// 1-based line/column and the expected token class. `E` and `A` are reserved
// quantifier keywords, not identifiers.
FormulaPtr parse_formula(const std::string& input);

// Parses a bare term (used by tooling/tests).
TermPtr parse_term_string(const std::string& input);

}  // namespace qrc
