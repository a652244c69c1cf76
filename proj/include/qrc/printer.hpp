#pragma once

#include <string>

#include "qrc/formula.hpp"

namespace qrc {

// Deterministic surface rendering; parse(render(f)) is structurally f.
std::string render_term(const TermPtr& t);
std::string render(const FormulaPtr& f);

}  // namespace qrc
