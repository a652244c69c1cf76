#pragma once

#include <cstdint>
#include <string>

namespace qrc {

// Outcome of one randomized agreement campaign between the eliminator and
// an independent oracle. `skipped` counts draws whose comparison stayed
// indeterminate (truncated-series precision); every other draw is counted
// in `agreed` or `mismatched`.
struct FuzzReport {
    long cases = 0;
    long agreed = 0;
    long mismatched = 0;
    long skipped = 0;
    std::string first_mismatch;  // rendering of the first disagreeing instance
};

// Field-ordered branch, order atoms of degree <= 2 in the bound variable:
// eliminate, evaluate at random rational / rational-function parameters, and
// compare with the Sturm-based existence oracle over the same instance.
FuzzReport fuzz_fragment_a(long cases, std::uint64_t seed);

// Valued branch, equations and inequations of degree <= 2: eliminate,
// instantiate parameters with rationals, and compare with the squarefree
// gcd-degree criterion for a common root avoiding the inequations.
FuzzReport fuzz_fragment_b(long cases, std::uint64_t seed);

// Valued branch, weak valuation comparisons between sides linear in the
// bound variable plus linear equations and inequations, in positive Boolean
// structure.  (Strict valuation atoms are excluded on purpose: the built-in
// series model has value group Z, where strictly-between constraints can
// separate it from the divisible-value-group theory the eliminator
// targets; on weak atoms the two agree.)  Consistency check: when the
// eliminated formula claims truth some candidate witness — a center, or a
// center displaced by c*t^rho across the critical radii and several
// directions — must satisfy the body, and when it claims falsity none may.
FuzzReport fuzz_fragment_c(long cases, std::uint64_t seed);

}  // namespace qrc
