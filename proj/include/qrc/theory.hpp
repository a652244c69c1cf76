#pragma once

#include <string>
#include <vector>

#include "qrc/formula.hpp"

namespace qrc {

enum class TheoryId { SigmaQO, SigmaQRC };
enum class Branch { RCVF, ACVF };

// Axioms carry stable names; witness constructors for existential axioms and
// reports key on them.
struct NamedAxiom {
    std::string name;
    FormulaPtr formula;
};

// Quasi-ordered field with non-trivial compatible valuation: field axioms,
// quasi-order axioms for both relations, (Q0)-(Q2) for both relations,
// non-triviality, and the two branch-linking sentences.
std::vector<NamedAxiom> sigma_qo();

// sigma_qo plus square-root axiom and monic odd-degree root axioms for every
// odd degree <= odd_degree_bound. Throws EvenBound on an even bound.
std::vector<NamedAxiom> sigma_qrc(int odd_degree_bound);

// ACVF -> `0 < -1`; RCVF -> `-1 < 0`.
FormulaPtr branch_axiom(Branch b);

// The monic odd-degree root sentence for one degree (odd, >= 1).
NamedAxiom axiom_odd_monic(int degree);

struct CompletionConfig {
    Branch branch = Branch::RCVF;
    int characteristic = 0;
    int residue_characteristic = 0;
};

// RCVF forces (0,0); ACVF allows (0,0), (0,p), (p,p). Throws InvalidConfig.
void validate_completion(const CompletionConfig& cc);

}  // namespace qrc
