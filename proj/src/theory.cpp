#include "qrc/theory.hpp"

#include "qrc/errors.hpp"
#include "qrc/parser.hpp"

namespace qrc {
namespace {

NamedAxiom ax(const char* name, const char* text) {
    return {name, parse_formula(text)};
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<NamedAxiom> sigma_qo() {
    std::vector<NamedAxiom> out;
    // Field axioms; unary minus is in the language, so additive inverses are
    // universal. Multiplicative inverses need the one existential sentence.
    out.push_back(ax("add-assoc", "A x. A y. A z. (x + y) + z = x + (y + z)"));
    out.push_back(ax("add-comm", "A x. A y. x + y = y + x"));
    out.push_back(ax("add-zero", "A x. x + 0 = x"));
    out.push_back(ax("add-neg", "A x. x + (-x) = 0"));
    out.push_back(ax("mul-assoc", "A x. A y. A z. (x*y)*z = x*(y*z)"));
    out.push_back(ax("mul-comm", "A x. A y. x*y = y*x"));
    out.push_back(ax("mul-one", "A x. x*1 = x"));
    out.push_back(ax("distrib", "A x. A y. A z. x*(y + z) = x*y + x*z"));
    out.push_back(ax("one-ne-zero", "1 != 0"));
    out.push_back(ax("mul-inverse", "A x. x != 0 -> E y. x*y = 1"));
    // Total quasi-orders.
    out.push_back(ax("ord-total", "A x. A y. x <= y | y <= x"));
    out.push_back(ax("ord-refl", "A x. x <= x"));
    out.push_back(ax("ord-trans", "A x. A y. A z. (x <= y & y <= z) -> x <= z"));
    out.push_back(ax("val-total", "A x. A y. x <=v y | y <=v x"));
    out.push_back(ax("val-refl", "A x. x <=v x"));
    out.push_back(ax("val-trans", "A x. A y. A z. (x <=v y & y <=v z) -> x <=v z"));
    // Quasi-ordered field axioms for both relations.
    out.push_back(ax("ord-q0", "A x. x ~ 0 -> x = 0"));
    out.push_back(ax("ord-q1", "A x. A y. A z. (x <= y & 0 <= z) -> x*z <= y*z"));
    out.push_back(ax("ord-q2", "A x. A y. A z. (x <= y & !(z ~ y)) -> x + z <= y + z"));
    out.push_back(ax("val-q0", "A x. x ~v 0 -> x = 0"));
    out.push_back(ax("val-q1", "A x. A y. A z. (x <=v y & 0 <=v z) -> x*z <=v y*z"));
    out.push_back(ax("val-q2", "A x. A y. A z. (x <=v y & !(z ~v y)) -> x + z <=v y + z"));
    out.push_back(ax("non-triviality", "E x. x != 0 & !(x ~v 1)"));
    out.push_back(ax("phi1", "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))"));
    out.push_back(ax("phi2", "-1 < 0 -> (A x. A y. (0 <= x & x <= y) -> x <=v y)"));
    return out;
}

NamedAxiom axiom_odd_monic(int degree) {
    if (degree < 1 || degree % 2 == 0)
        throw InvalidConfig("odd-degree axiom needs an odd degree >= 1");
    // A a0. ... A a(d-1). E x. x^d + a(d-1)*x^(d-1) + ... + a0 = 0
    TermPtr x = Term::variable("x");
    TermPtr lhs = Term::pow(x, static_cast<unsigned long>(degree));
    for (int i = degree - 1; i >= 0; --i) {
        TermPtr coeff = Term::variable("a" + std::to_string(i));
        TermPtr mono = i == 0 ? coeff : Term::mul(coeff, Term::pow(x, static_cast<unsigned long>(i)));
        lhs = Term::add(lhs, mono);
    }
    FormulaPtr body = f_exists("x", f_atom(Rel::Eq, lhs, Term::constant(0)));
    for (int i = degree - 1; i >= 0; --i) body = f_forall("a" + std::to_string(i), body);
    return {"odd-monic-" + std::to_string(degree), body};
}

std::vector<NamedAxiom> sigma_qrc(int odd_degree_bound) {
    if (odd_degree_bound % 2 == 0) throw EvenBound("odd-degree bound must be odd");
    std::vector<NamedAxiom> out = sigma_qo();
    out.push_back(ax("sqrt", "A x. (0 <= x -> E y. y*y = x)"));
    for (int d = 1; d <= odd_degree_bound; d += 2) out.push_back(axiom_odd_monic(d));
    return out;
}

FormulaPtr branch_axiom(Branch b) {
    return b == Branch::ACVF ? parse_formula("0 < -1") : parse_formula("-1 < 0");
}

void validate_completion(const CompletionConfig& cc) {
    int c = cc.characteristic, r = cc.residue_characteristic;
    if (cc.branch == Branch::RCVF) {
        if (c != 0 || r != 0) throw InvalidConfig("RCVF completions are characteristic (0, 0)");
        return;
    }
    if (c == 0 && r == 0) return;
    if (c == 0 && is_prime(r)) return;
    if (c == r && is_prime(c)) return;
    throw InvalidConfig("ACVF completions allow (0,0), (0,p), (p,p) with p prime");
}

}  // namespace qrc
