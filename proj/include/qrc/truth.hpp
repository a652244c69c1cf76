#pragma once

namespace qrc {

// Kleene three-valued logic; Indeterminate marks comparisons whose outcome
// depends on series coefficients beyond the known precision.
enum class TruthValue { False, Indeterminate, True };

inline TruthValue tv(bool b) { return b ? TruthValue::True : TruthValue::False; }
inline bool is_det(TruthValue t) { return t != TruthValue::Indeterminate; }

inline TruthValue tv_not(TruthValue a) {
    if (a == TruthValue::True) return TruthValue::False;
    if (a == TruthValue::False) return TruthValue::True;
    return TruthValue::Indeterminate;
}
inline TruthValue tv_and(TruthValue a, TruthValue b) { return a < b ? a : b; }
inline TruthValue tv_or(TruthValue a, TruthValue b) { return a < b ? b : a; }

}  // namespace qrc
