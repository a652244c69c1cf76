#include "doctest.h"

#include "qrc/errors.hpp"
#include "qrc/generator.hpp"
#include "qrc/normalize.hpp"
#include "qrc/parser.hpp"
#include "qrc/printer.hpp"
#include "qrc/rng.hpp"

using namespace qrc;

namespace {

std::string rt(const std::string& s) { return render(parse_formula(s)); }

bool contains_kind(const FormulaPtr& f, FKind k) {
    if (f->kind == k) return true;
    switch (f->kind) {
        case FKind::Atom: return false;
        case FKind::Not:
        case FKind::Exists:
        case FKind::Forall: return contains_kind(f->a, k);
        default: return contains_kind(f->a, k) || contains_kind(f->b, k);
    }
}

bool atoms_in_normal_alphabet(const FormulaPtr& f) {
    switch (f->kind) {
        case FKind::Atom:
            return f->rel != Rel::Sim && f->rel != Rel::SimV;
        case FKind::Not:
            return false;  // NNF has no negations left
        case FKind::Exists:
        case FKind::Forall:
            return atoms_in_normal_alphabet(f->a);
        default:
            return atoms_in_normal_alphabet(f->a) && atoms_in_normal_alphabet(f->b);
    }
}

}  // namespace

TEST_CASE("render reproduces canonical axiom strings byte for byte") {
    const char* pinned[] = {
        "0 < -1",
        "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))",
        "-1 < 0 -> (A x. A y. (0 <= x & x <= y) -> x <=v y)",
        "A x. (0 <= x -> E y. y*y = x)",
        "E x. x != 0 & !(x ~v 1)",
        "A a0. E x. x + a0 = 0",
        "A x. A y. A z. (x <= y & !(z ~ y)) -> x + z <= y + z",
    };
    for (const char* s : pinned) CHECK(rt(s) == s);
}

TEST_CASE("hand-built order/value mixing axiom renders exactly") {
    // 0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))
    auto zero = Term::constant(0);
    auto mone = Term::neg(Term::constant(1));
    auto x = Term::variable("x");
    auto y = Term::variable("y");
    FormulaPtr body = f_iff(
        f_and(f_atom(Rel::Le, zero, x), f_atom(Rel::Le, x, y)),
        f_atom(Rel::LeV, x, y));
    FormulaPtr f = f_implies(f_atom(Rel::Lt, zero, mone),
                             f_forall("x", f_forall("y", body)));
    CHECK(render(f) == "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))");
}

TEST_CASE("parser precedence and associativity") {
    FormulaPtr f = parse_formula("x = 0 & y = 0 | z = 0");
    CHECK(f->kind == FKind::Or);
    CHECK(f->a->kind == FKind::And);

    f = parse_formula("x = 0 -> y = 0 -> z = 0");
    CHECK(f->kind == FKind::Implies);
    CHECK(f->b->kind == FKind::Implies);

    f = parse_formula("!x = 0 & y = 0");
    CHECK(f->kind == FKind::And);
    CHECK(f->a->kind == FKind::Not);

    f = parse_formula("E x. x = 0 & y = 0");
    CHECK(f->kind == FKind::Exists);
    CHECK(f->a->kind == FKind::And);

    f = parse_formula("0 <= x -> E y. y*y = x");
    CHECK(f->kind == FKind::Implies);
    CHECK(f->b->kind == FKind::Exists);

    f = parse_formula("(x + y) <= z");
    CHECK(f->kind == FKind::Atom);
    CHECK(f->rel == Rel::Le);

    f = parse_formula("x^3 = y");
    CHECK(term_equal(f->t1, Term::mul(Term::mul(Term::variable("x"), Term::variable("x")),
                                      Term::variable("x"))));
}

TEST_CASE("value relations tokenize by maximal munch") {
    FormulaPtr f = parse_formula("x <=v y");
    CHECK(f->rel == Rel::LeV);
    f = parse_formula("x <= v");
    CHECK(f->rel == Rel::Le);
    CHECK(f->t2->name == "v");
    f = parse_formula("x <v y");
    CHECK(f->rel == Rel::LtV);
    f = parse_formula("x ~v y");
    CHECK(f->rel == Rel::SimV);
    f = parse_formula("x ~ v");
    CHECK(f->rel == Rel::Sim);
}

TEST_CASE("syntax errors carry position and expectation") {
    try {
        parse_formula("x +");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 4);
    }
    try {
        parse_formula("E E. x = 0");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.expected.find("reserved") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_formula("x = y y"), SyntaxError);
    CHECK_THROWS_AS(parse_formula(""), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x # y"), SyntaxError);
}

TEST_CASE("free variables") {
    CHECK(free_vars(parse_formula("x <= x")) == std::set<std::string>{"x"});
    CHECK(free_vars(parse_formula("E x. x = y")) == std::set<std::string>{"y"});
    CHECK(free_vars(parse_formula(
              "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))"))
              .empty());
    // Shadowing: inner binder hides the outer occurrence only inside.
    CHECK(free_vars(parse_formula("x = 0 & (E x. x = 1)")) == std::set<std::string>{"x"});
}

TEST_CASE("normalize expands derived relations") {
    CHECK(formula_equal(normalize(parse_formula("x ~ y")),
                        parse_formula("x <= y & y <= x")));
    CHECK(formula_equal(normalize(parse_formula("x ~v y")),
                        parse_formula("x <=v y & y <=v x")));
    CHECK(formula_equal(normalize(parse_formula("!(x <= y)")), parse_formula("y < x")));
    CHECK(formula_equal(normalize(parse_formula("!(x <v y)")), parse_formula("y <=v x")));
    CHECK(formula_equal(normalize(parse_formula("!(x = y)")), parse_formula("x != y")));
    CHECK(formula_equal(normalize(parse_formula("!(x ~ y)")),
                        parse_formula("y < x | x < y")));
}

TEST_CASE("normalize eliminates implications and renames binders") {
    FormulaPtr n = normalize(parse_formula("E x. x = y -> x < y"));
    CHECK(!contains_kind(n, FKind::Implies));
    CHECK(!contains_kind(n, FKind::Iff));
    CHECK(!contains_kind(n, FKind::Not));
    CHECK(formula_equal(n, parse_formula("E var$0. var$0 != y | var$0 < y")));

    // Negation flips the quantifier.
    CHECK(formula_equal(normalize(parse_formula("!(A x. 0 <= x)")),
                        parse_formula("E var$0. var$0 < 0")));

    // Bound names never collide with free occurrences of the var$ scheme.
    FormulaPtr m = normalize(parse_formula("E x. x = var$0"));
    CHECK(formula_equal(m, parse_formula("E var$1. var$1 = var$0")));
}

TEST_CASE("normalize properties on random corpus") {
    Rng rng(20240817);
    for (int i = 0; i < 400; ++i) {
        FormulaPtr f = random_formula(rng, 4);
        FormulaPtr n = normalize(f);
        CHECK(formula_equal(normalize(n), n));
        CHECK(free_vars(f) == free_vars(n));
        CHECK(atoms_in_normal_alphabet(n));
    }
}

TEST_CASE("render/parse round trip on random corpus") {
    Rng rng(7);
    for (int i = 0; i < 600; ++i) {
        FormulaPtr f = random_formula(rng, 4);
        std::string s = render(f);
        CAPTURE(s);
        FormulaPtr g = parse_formula(s);
        CHECK(formula_equal(f, g));
    }
}

TEST_CASE("normalized atom encoding") {
    FormulaPtr le = parse_formula("x <= y");
    NormalizedAtom a = to_normalized_atom(le);
    REQUIRE(std::holds_alternative<OrderAtom>(a));
    const auto& oa = std::get<OrderAtom>(a);
    CHECK(oa.sigma == OrderAtom::Sigma::GeqZero);
    CHECK(oa.p == Polynomial::variable("y") - Polynomial::variable("x"));

    NormalizedAtom b = to_normalized_atom(parse_formula("x <=v y"));
    REQUIRE(std::holds_alternative<ValueAtom>(b));
    const auto& va = std::get<ValueAtom>(b);
    CHECK(va.rho == ValueAtom::Rho::Le);
    CHECK(va.p == Polynomial::variable("y"));  // v(y) <= v(x)
    CHECK(va.q == Polynomial::variable("x"));

    // Equations normalize to a positive leading coefficient; their content
    // is kept, since dividing an equation by an integer is not an
    // equivalence in positive residue characteristic.
    NormalizedAtom c = to_normalized_atom(parse_formula("x*x = y"));
    const auto& oc = std::get<OrderAtom>(c);
    CHECK(oc.sigma == OrderAtom::Sigma::EqZero);
    CHECK(oc.p == Polynomial::variable("x") * Polynomial::variable("x") -
                      Polynomial::variable("y"));

    CHECK(render(atom_to_formula(make_order_atom(Polynomial::variable("y"),
                                                 OrderAtom::Sigma::GeqZero))) == "0 <= y");
    CHECK(render(atom_to_formula(make_order_atom(Polynomial::variable("y"),
                                                 OrderAtom::Sigma::NeqZero))) == "y != 0");
}

TEST_CASE("terms render canonically from polynomials") {
    Polynomial p = Polynomial::variable("x") * Polynomial::variable("x") -
                   Polynomial::integer(2) * Polynomial::variable("x") + Polynomial::integer(1);
    CHECK(render_term(poly_to_term(p)) == "x*x - 2*x + 1");
    CHECK(render_term(poly_to_term(Polynomial())) == "0");
    CHECK(render_term(poly_to_term(Polynomial::integer(-7))) == "-7");
}
