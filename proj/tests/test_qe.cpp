#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "qrc/errors.hpp"
#include "qrc/fuzz.hpp"
#include "qrc/generator.hpp"
#include "qrc/models.hpp"
#include "qrc/normalize.hpp"
#include "qrc/oracles.hpp"
#include "qrc/parser.hpp"
#include "qrc/printer.hpp"
#include "qrc/qe.hpp"
#include "qrc/rng.hpp"

using namespace qrc;

namespace {

// qf_equiv_sample requires identical free-variable sets; elimination may fold
// a parameter away entirely, so pad both sides with trivial v = v atoms.
FormulaPtr pad_vars(FormulaPtr g, const std::set<std::string>& vars) {
    const auto have = free_vars(g);
    for (const auto& v : vars) {
        if (have.count(v) == 0) {
            g = f_and(g, f_atom(Rel::Eq, Term::variable(v), Term::variable(v)));
        }
    }
    return g;
}

void check_equiv(const ModelDescriptor& m, const FormulaPtr& a0, const FormulaPtr& b0,
                 long n, const char* what) {
    auto uni = free_vars(a0);
    for (const auto& v : free_vars(b0)) uni.insert(v);
    const FormulaPtr a = pad_vars(a0, uni);
    const FormulaPtr b = pad_vars(b0, uni);
    const EquivReport r = qf_equiv_sample(m, a, b, n, 7777);
    CHECK_MESSAGE(r.pass, what << ": " << r.counterexample);
    CHECK_MESSAGE(r.checked > 0, what << ": no determinate samples");
}

FormulaPtr elim(const char* input, Branch b) {
    return eliminate(parse_formula(input), b, EliminationConfig{});
}

}  // namespace

TEST_CASE("bounded-interval example eliminates to an inequality between the bounds") {
    const FormulaPtr in = parse_formula("E x. (y <= x & x <= z)");
    const FormulaPtr r = eliminate(in, Branch::RCVF, EliminationConfig{});
    CHECK(free_vars(r) == std::set<std::string>{"y", "z"});
    check_equiv(ModelDescriptor::mr(), r, parse_formula("y <= z"), 400,
                "interval example, ordered branch");
    // on the valued branch <= reads valuationally and the result matches <=v
    check_equiv(ModelDescriptor::ma(), elim("E x. (y <= x & x <= z)", Branch::ACVF),
                parse_formula("y <=v z"), 400, "interval example, valued branch");
}

TEST_CASE("square-root existence eliminates to nonnegativity / truth") {
    CHECK(render(elim("E x. x*x = y", Branch::RCVF)) == "0 <= y");
    check_equiv(ModelDescriptor::mr(), elim("E x. x*x = y", Branch::RCVF),
                parse_formula("0 <= y"), 400, "square root, ordered branch");
    CHECK(render(elim("E x. x*x = y", Branch::ACVF)) == "0 = 0");
}

TEST_CASE("same-value-but-distinct example eliminates to y != 0") {
    const FormulaPtr r = elim("E x. (x ~v y & x != y)", Branch::ACVF);
    check_equiv(ModelDescriptor::ma(), r, parse_formula("y != 0"), 400,
                "ball example, valued branch");
}

TEST_CASE("eliminate output is quantifier-free with shrinking free variables") {
    const char* inputs[] = {
        "E x. (y <= x & x <= z)",
        "E x. x*x = y",
        "A x. (x*x = y -> 0 <= x) ",
        "E x. (x ~v y & x != y)",
        "E x. E w. (x + w = y & w != z)",
    };
    for (const char* s : inputs) {
        const FormulaPtr in = parse_formula(s);
        for (Branch b : {Branch::RCVF, Branch::ACVF}) {
            if (b == Branch::RCVF && std::string(s).find("~v") != std::string::npos)
                continue;  // valued atoms on the quantified variable: ordered branch rejects
            const FormulaPtr out = eliminate(in, b, EliminationConfig{});
            CHECK(free_vars(out).size() <= free_vars(in).size());
            for (const auto& v : free_vars(out)) CHECK(free_vars(in).count(v) == 1);
            CHECK(is_quantifier_free(out));
        }
    }
}

TEST_CASE("guarded elimination separates the branches") {
    const EliminationConfig cfg;
    SUBCASE("x*x + 1 = 0 is valued-branch-only") {
        const GuardedResult r = eliminate_guarded(parse_formula("E x. x*x + 1 = 0"), cfg);
        CHECK(render(r.acvf_part) == "0 = 0");
        CHECK(render(r.rcvf_part) == "0 != 0");
        const FormulaPtr g = guarded_formula(r);
        CHECK(render(g) == "0 < -1");
        // the ordered model selects the (false) rcvf part, the valued model
        // the (true) acvf part
        CHECK(eval_qf(ModelDescriptor::mr(), g, {}) == TruthValue::False);
        CHECK(eval_qf(ModelDescriptor::ma(), g, {}) == TruthValue::True);
    }
    SUBCASE("x*x = 2 holds in both branches") {
        const GuardedResult r = eliminate_guarded(parse_formula("E x. x*x = 1+1"), cfg);
        CHECK(render(r.acvf_part) == "0 = 0");
        CHECK(render(r.rcvf_part) == "0 = 0");
        CHECK(render(guarded_formula(r)) == "0 = 0");
    }
    SUBCASE("free parameters survive with the right guard selected per model") {
        const GuardedResult r = eliminate_guarded(parse_formula("E x. x*x = y"), cfg);
        const FormulaPtr g = guarded_formula(r);
        check_equiv(ModelDescriptor::mr(), g, parse_formula("0 <= y"), 300,
                    "guarded square root on the ordered model");
        check_equiv(ModelDescriptor::ma(), g, parse_formula("y = y"), 300,
                    "guarded square root on the valued model");
    }
    SUBCASE("quantifier-free passthrough normalizes and merges the order") {
        const FormulaPtr f = parse_formula("x <= y");
        const GuardedResult r = eliminate_guarded(f, cfg);
        check_equiv(ModelDescriptor::mr(), r.rcvf_part, normalize(f), 300,
                    "qf passthrough, ordered branch");
        check_equiv(ModelDescriptor::ma(), r.acvf_part, parse_formula("x <=v y"), 300,
                    "qf passthrough merges <= into <=v on the valued branch");
    }
}

TEST_CASE("virtual substitution pins") {
    SUBCASE("x >= 0 at the root of a linear polynomial") {
        const FormulaPtr atom = parse_formula("0 <= x");
        const TestPoint tp = TestPoint::finite(-term_to_poly(Term::variable("b")),
                                               term_to_poly(Term::variable("a")));
        CHECK(render(substitute_virtual(to_normalized_atom(atom), "x", tp)) ==
              "0 <= -a*b");
        CHECK(render(tp.guard) == "a != 0");
    }
    SUBCASE("linear positivity at plus infinity is the leading-coefficient chain") {
        const FormulaPtr out = substitute_virtual(to_normalized_atom(parse_formula("0 < a*x + b")),
                                                  "x", TestPoint::plus_infinity());
        CHECK(render(out) == "0 < a | a = 0 & 0 < b");
        // when the polynomial is definitely linear the chain collapses to lc > 0
        check_equiv(ModelDescriptor::mr(),
                    f_and(parse_formula("a != 0"), out),
                    parse_formula("a != 0 & 0 < a"), 400,
                    "leading-coefficient condition in the nondegenerate regime");
    }
    SUBCASE("same-value atom at a sphere of radius v(c - d)") {
        const Polynomial c = term_to_poly(Term::variable("c"));
        const Polynomial d = term_to_poly(Term::variable("d"));
        const Polynomial one = Polynomial::integer(1);
        const TestPoint tp = TestPoint::ball(c, one, c - d, one,
                                             TestPoint::RadiusRel::EqualTo, {{d, one}});
        CHECK(render(tp.guard) == "c - d != 0");
        const FormulaPtr n = normalize(parse_formula("x ~v y"));
        const FormulaPtr sub = f_and(substitute_virtual(to_normalized_atom(n->a), "x", tp),
                                     substitute_virtual(to_normalized_atom(n->b), "x", tp));
        // generic sphere points satisfy v(x) = min(v(c), v(c - d)); the two
        // regimes split on which argument attains the minimum
        check_equiv(ModelDescriptor::ma(), sub,
                    parse_formula("(c <=v c - d & c - d ~v y) | (c - d <v c & c ~v y)"),
                    600, "sphere substitution, both regimes");
        // in the no-cancellation regime v(c - d) >= v(c) this is exactly
        // (c - d) ~v y
        const FormulaPtr regime = parse_formula("c <=v c - d");
        check_equiv(ModelDescriptor::ma(), f_and(regime, sub),
                    f_and(regime, parse_formula("c - d ~v y")), 600,
                    "sphere substitution, radius-dominant regime");
    }
}

TEST_CASE("sentence decisions across completions") {
    const EliminationConfig cfg;
    const CompletionConfig rc;                       // RCVF (0, 0)
    const CompletionConfig a00{Branch::ACVF, 0, 0};  // equicharacteristic zero
    const CompletionConfig a02{Branch::ACVF, 0, 2};  // mixed characteristic
    const CompletionConfig a22{Branch::ACVF, 2, 2};  // equicharacteristic two

    CHECK_FALSE(decide_sentence(parse_formula("E x. x*x + 1 = 0"), rc, cfg));
    CHECK(decide_sentence(parse_formula("E x. x*x + 1 = 0"), a00, cfg));
    CHECK(decide_sentence(parse_formula("E x. x*x = 1+1"), rc, cfg));

    CHECK(decide_sentence(parse_formula("1+1 ~v 1"), a00, cfg));
    CHECK_FALSE(decide_sentence(parse_formula("1+1 ~v 1"), a02, cfg));

    // characteristic two: 1 + 1 = 0 becomes provable, and 2 acquires
    // infinite value so it is no longer of the same value as 1
    CHECK(decide_sentence(parse_formula("1+1 = 0"), a22, cfg));
    CHECK_FALSE(decide_sentence(parse_formula("1+1 ~v 1"), a22, cfg));
    CHECK(decide_sentence(parse_formula("E x. x*x + 1 = 0"), a22, cfg));

    CHECK_THROWS_AS(decide_sentence(parse_formula("0 <= y"), rc, cfg), NotASentence);
    CHECK_THROWS_AS(validate_completion(CompletionConfig{Branch::RCVF, 0, 2}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion(CompletionConfig{Branch::ACVF, 2, 3}), InvalidConfig);
    CHECK_THROWS_AS(validate_completion(CompletionConfig{Branch::ACVF, 4, 4}), InvalidConfig);
}

TEST_CASE("unsupported fragments raise instead of guessing") {
    const EliminationConfig cfg;
    // ordered branch: valued atoms on the quantified variable are out of scope
    CHECK_THROWS_AS(eliminate(parse_formula("E x. x <=v y"), Branch::RCVF, cfg),
                    UnsupportedFragment);
    // cubic in the quantified variable exceeds the degree table
    CHECK_THROWS_AS(eliminate(parse_formula("E x. x*x*x = y"), Branch::RCVF, cfg),
                    UnsupportedFragment);
    CHECK_THROWS_AS(eliminate(parse_formula("E x. x*x*x = y"), Branch::ACVF, cfg),
                    UnsupportedFragment);
    // valued branch: value atoms mixed with a quadratic equation in the
    // same variable fall outside the linear-value fragment
    CHECK_THROWS_AS(eliminate(parse_formula("E x. (x <=v y & x*x = y)"), Branch::ACVF, cfg),
                    UnsupportedFragment);
    // config validation
    EliminationConfig bad;
    bad.max_degree = 3;
    CHECK_THROWS_AS(eliminate(parse_formula("E x. x = 0"), Branch::RCVF, bad),
                    InvalidConfig);
    // budget
    EliminationConfig tiny;
    tiny.max_atoms = 2;
    CHECK_THROWS_AS(eliminate(parse_formula("E x. (y <= x & x <= z)"), Branch::RCVF, tiny),
                    BudgetExceeded);
}

TEST_CASE("substitution table misses are reported") {
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial one = Polynomial::integer(1);
    const TestPoint ball = TestPoint::ball(y, one, one, one,
                                           TestPoint::RadiusRel::StrictlyInside, {});
    // field-order inequalities have no ball rule
    CHECK_THROWS_AS(substitute_virtual(NormalizedAtom{OrderAtom{x, OrderAtom::Sigma::GeqZero}},
                                       "x", ball),
                    TableMiss);
    // quadratic dependence at a ball point has no rule either
    CHECK_THROWS_AS(substitute_virtual(NormalizedAtom{OrderAtom{x * x - y, OrderAtom::Sigma::EqZero}},
                                       "x", ball),
                    TableMiss);
}

TEST_CASE("eliminate is idempotent on quantifier-free input") {
    Rng rng(918273);
    const EliminationConfig cfg;
    const auto mr = ModelDescriptor::mr();
    const auto ma = ModelDescriptor::ma();
    const std::set<std::string> vars{"u", "w"};
    for (int it = 0; it < 20; ++it) {
        const FormulaPtr f = random_qf_formula(rng, 3, {"u", "w"});
        const FormulaPtr n = normalize(f);
        const EquivReport r1 = qf_equiv_sample(mr, pad_vars(eliminate(f, Branch::RCVF, cfg), vars),
                                               pad_vars(n, vars), 60, 99);
        CHECK_MESSAGE(r1.pass, "ordered branch: " << render(f) << " | " << r1.counterexample);
        const EquivReport r2 = qf_equiv_sample(ma, pad_vars(eliminate(f, Branch::ACVF, cfg), vars),
                                               pad_vars(n, vars), 60, 99);
        CHECK_MESSAGE(r2.pass, "valued branch: " << render(f) << " | " << r2.counterexample);
    }
}

TEST_CASE("fuzz campaigns stay in agreement (small smoke; acceptance runs full size)") {
    const FuzzReport a = fuzz_fragment_a(60, 42);
    CHECK(a.cases == 60);
    CHECK_MESSAGE(a.mismatched == 0, a.first_mismatch);
    const FuzzReport b = fuzz_fragment_b(60, 42);
    CHECK(b.cases == 60);
    CHECK_MESSAGE(b.mismatched == 0, b.first_mismatch);
    const FuzzReport c = fuzz_fragment_c(60, 42);
    CHECK(c.cases == 60);
    CHECK_MESSAGE(c.mismatched == 0, c.first_mismatch);
}
