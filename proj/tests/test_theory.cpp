#include <set>

#include "doctest.h"
#include "qrc/errors.hpp"
#include "qrc/parser.hpp"
#include "qrc/printer.hpp"
#include "qrc/theory.hpp"

using namespace qrc;

namespace {

FormulaPtr find_axiom(const std::vector<NamedAxiom>& axs, const std::string& name) {
    for (const auto& a : axs)
        if (a.name == name) return a.formula;
    REQUIRE_MESSAGE(false, "axiom not found: " << name);
    return nullptr;
}

}  // namespace

TEST_CASE("base theory contents") {
    auto axs = sigma_qo();
    CHECK(axs.size() == 25);

    std::set<std::string> names;
    for (const auto& a : axs) {
        CHECK(names.insert(a.name).second);       // unique names
        CHECK(free_vars(a.formula).empty());      // closed sentences
    }

    CHECK(render(find_axiom(axs, "phi1")) ==
          "0 < -1 -> (A x. A y. ((0 <= x & x <= y) <-> x <=v y))");
    CHECK(render(find_axiom(axs, "phi2")) ==
          "-1 < 0 -> (A x. A y. (0 <= x & x <= y) -> x <=v y)");
    CHECK(render(find_axiom(axs, "non-triviality")) ==
          "E x. x != 0 & !(x ~v 1)");

    // The additive quasi-order axiom carries its side condition; compare as
    // syntax trees so whitespace conventions cannot drift.
    CHECK(formula_equal(
        find_axiom(axs, "ord-q2"),
        parse_formula("A x. A y. A z. (x <= y & !(z ~ y)) -> x+z <= y+z")));
    CHECK(formula_equal(
        find_axiom(axs, "val-q2"),
        parse_formula("A x. A y. A z. (x <=v y & !(z ~v y)) -> x+z <=v y+z")));
}

TEST_CASE("every axiom round-trips through the grammar") {
    for (const auto& a : sigma_qrc(5)) {
        FormulaPtr back = parse_formula(render(a.formula));
        CHECK_MESSAGE(formula_equal(back, a.formula), a.name);
    }
}

TEST_CASE("closure axioms") {
    auto axs = sigma_qrc(3);
    CHECK(axs.size() == 25 + 1 + 2);  // sqrt + odd degrees 1, 3

    CHECK(render(find_axiom(axs, "sqrt")) ==
          "A x. (0 <= x -> E y. y*y = x)");
    CHECK(render(find_axiom(axs, "odd-monic-1")) ==
          "A a0. E x. x + a0 = 0");
    CHECK(formula_equal(
        find_axiom(axs, "odd-monic-3"),
        parse_formula("A a0. A a1. A a2. E x. x*x*x + a2*(x*x) + a1*x + a0 = 0")));

    CHECK_THROWS_AS(sigma_qrc(4), EvenBound);
    CHECK_THROWS_AS(axiom_odd_monic(2), InvalidConfig);
    CHECK_THROWS_AS(axiom_odd_monic(0), InvalidConfig);
}

TEST_CASE("branch axioms") {
    CHECK(render(branch_axiom(Branch::ACVF)) == "0 < -1");
    CHECK(render(branch_axiom(Branch::RCVF)) == "-1 < 0");
}

TEST_CASE("completion validation") {
    CHECK_NOTHROW(validate_completion({Branch::RCVF, 0, 0}));
    CHECK_THROWS_AS(validate_completion({Branch::RCVF, 0, 2}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion({Branch::RCVF, 5, 5}), InvalidConfig);

    CHECK_NOTHROW(validate_completion({Branch::ACVF, 0, 0}));
    CHECK_NOTHROW(validate_completion({Branch::ACVF, 0, 5}));
    CHECK_NOTHROW(validate_completion({Branch::ACVF, 7, 7}));
    CHECK_THROWS_AS(validate_completion({Branch::ACVF, 0, 4}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion({Branch::ACVF, 2, 5}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion({Branch::ACVF, 5, 0}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion({Branch::ACVF, 1, 1}), InvalidConfig);
}
