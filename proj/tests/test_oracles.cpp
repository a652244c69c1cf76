#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "qrc/errors.hpp"
#include "qrc/laurent.hpp"
#include "qrc/models.hpp"
#include "qrc/oracles.hpp"
#include "qrc/parser.hpp"
#include "qrc/ratfunc.hpp"
#include "qrc/rng.hpp"
#include "qrc/upoly.hpp"

using namespace qrc;

namespace {

using Sig = OrderAtom::Sigma;

UPoly<Rational> up(std::vector<long> cs) {
    std::vector<Rational> rs;
    for (long c : cs) rs.push_back(Rational(c));
    return UPoly<Rational>(rs);
}

// Polynomial in t as a rational-function element.
RatFuncElem rf(std::vector<long> cs) {
    return RatFuncElem(up(std::move(cs)), up({1}));
}

std::optional<Rational> at(long num, long den = 1) { return make_rational(num, den); }

LaurentElem lt(long start, std::vector<long> cs) {
    std::vector<Rational> rs;
    for (long c : cs) rs.push_back(Rational(c));
    return LaurentElem::make(start, std::move(rs), LaurentElem::kExact);
}

}  // namespace

TEST_CASE("tarski queries over the rationals") {
    const UPoly<Rational> f = up({-2, 0, 1});  // x^2 - 2
    const UPoly<Rational> one = up({1});

    // Root counting over the whole line and over intervals.
    CHECK(sturm_tarski<Rational>(f, one) == 2);
    CHECK(sturm_tarski<Rational>(f, up({0, 1})) == 0);  // g = x: one root each sign
    CHECK(sturm_tarski<Rational>(f, one, at(0), std::nullopt) == 1);
    CHECK(sturm_tarski<Rational>(f, one, std::nullopt, at(0)) == 1);
    CHECK(sturm_tarski<Rational>(f, one, at(1), at(2)) == 1);  // sqrt(2) in (1, 2]
    CHECK(sturm_tarski<Rational>(f, one, at(2), at(3)) == 0);

    // Half-open convention: a root at the right endpoint is counted, at the
    // left endpoint it is not.
    const UPoly<Rational> g = up({-1, 1});  // x - 1
    CHECK(sturm_tarski<Rational>(g, one, at(0), at(1)) == 1);
    CHECK(sturm_tarski<Rational>(g, one, at(1), at(2)) == 0);

    // Repeated roots are counted once.
    const UPoly<Rational> sq = up({1, -2, 1});  // (x - 1)^2
    CHECK(sturm_tarski<Rational>(sq, one) == 1);
    CHECK(squarefree_part(sq) == up({-1, 1}));

    // Signed query: g weights roots by its sign.
    // f = (x+2)(x-1): g = x is negative at -2, positive at 1.
    const UPoly<Rational> h = up({-2, 1, 1});
    CHECK(sturm_tarski<Rational>(h, up({0, 1})) == 0);
    CHECK(sturm_tarski<Rational>(h, up({3, 1})) == 2);    // x + 3 positive at both
    CHECK(sturm_tarski<Rational>(h, up({-1, 1})) == -1);  // x - 1 vanishes at root 1
    CHECK(sturm_tarski<Rational>(h, up({-3, -1})) == -2);  // -x - 3 negative at both

    // Degenerate inputs.
    CHECK(sturm_tarski<Rational>(up({5}), one) == 0);
    CHECK_THROWS_AS(sturm_tarski<Rational>(UPoly<Rational>(), one), ZeroPolynomial);
}

TEST_CASE("tarski queries over rational functions") {
    const UPoly<RatFuncElem> one{std::vector<RatFuncElem>{rf({1})}};
    // x^2 - t has two roots (+-sqrt(t)) in the real closure of Q(t).
    const UPoly<RatFuncElem> f{std::vector<RatFuncElem>{-RatFuncElem::t(), rf({0}), rf({1})}};
    CHECK(sturm_tarski<RatFuncElem>(f, one) == 2);
    // Both roots are infinitesimal: they lie in (-1, 1] but not in (1, 2].
    CHECK(sturm_tarski<RatFuncElem>(f, one, std::optional<RatFuncElem>(rf({-1})),
                                    std::optional<RatFuncElem>(rf({1}))) == 2);
    CHECK(sturm_tarski<RatFuncElem>(f, one, std::optional<RatFuncElem>(rf({1})),
                                    std::optional<RatFuncElem>(rf({2}))) == 0);
    // And they straddle zero.
    CHECK(sturm_tarski<RatFuncElem>(f, one, std::optional<RatFuncElem>(rf({0})),
                                    std::nullopt) == 1);
    // g = x - t: positive at +sqrt(t) (v(sqrt t) = 1/2 < 1), negative at -sqrt(t).
    const UPoly<RatFuncElem> g{std::vector<RatFuncElem>{-RatFuncElem::t(), rf({1})}};
    CHECK(sturm_tarski<RatFuncElem>(f, g) == 0);
}

TEST_CASE("tarski query interval additivity") {
    // The right-limit convention makes (a,b] + (b,c] = (a,c] exact even when
    // the cut point is a root.
    Rng rng(20260815);
    const UPoly<Rational> one = up({1});
    for (int iter = 0; iter < 300; ++iter) {
        // Build f from known linear factors so cut points can hit roots.
        UPoly<Rational> f = up({static_cast<long>(rng.range(1, 3))});
        std::vector<long> roots;
        long nfac = rng.range(1, 3);
        for (long i = 0; i < nfac; ++i) {
            long r = rng.range(-4, 4);
            roots.push_back(r);
            f = f * up({-r, 1});
        }
        long dg = rng.range(0, 2);
        std::vector<long> gcs;
        for (long i = 0; i <= dg; ++i) gcs.push_back(rng.range(-3, 3));
        UPoly<Rational> g = up(gcs);

        long a = rng.range(-5, -1);
        long b = rng.coin() ? roots[0] : rng.range(-1, 2);  // often a root
        long c = rng.range(5, 9);
        if (!(a < b && b < c)) continue;
        long whole = sturm_tarski<Rational>(f, g, at(a), at(c));
        long left = sturm_tarski<Rational>(f, g, at(a), at(b));
        long right = sturm_tarski<Rational>(f, g, at(b), at(c));
        CHECK(whole == left + right);
        // Unbounded splits agree as well.
        long all = sturm_tarski<Rational>(f, g);
        long lo = sturm_tarski<Rational>(f, g, std::nullopt, at(b));
        long hi = sturm_tarski<Rational>(f, g, at(b), std::nullopt);
        CHECK(all == lo + hi);
    }
}

TEST_CASE("satisfiability of sign conditions over the rationals") {
    // exists x: x^2 - 2 = 0 and x > 0.
    std::vector<ExistsAtom<Rational>> a1 = {{up({-2, 0, 1}), Sig::EqZero},
                                            {up({0, 1}), Sig::GtZero}};
    CHECK(decide_exists_order(a1));
    // exists x: x^2 + 1 <= 0, i.e. -(x^2 + 1) >= 0.
    std::vector<ExistsAtom<Rational>> a2 = {{up({-1, 0, -1}), Sig::GeqZero}};
    CHECK_FALSE(decide_exists_order(a2));
    // Three conditions pinning x = sqrt(2) work; adding x < 1 fails.
    std::vector<ExistsAtom<Rational>> a3 = {{up({-2, 0, 1}), Sig::EqZero},
                                            {up({0, 1}), Sig::GtZero},
                                            {up({-1, 1}), Sig::GtZero}};
    CHECK(decide_exists_order(a3));
    a3.push_back({up({1, -1}), Sig::GtZero});  // 1 - x > 0
    CHECK_FALSE(decide_exists_order(a3));
    // A double root satisfies = and >= but not >.
    std::vector<ExistsAtom<Rational>> a4 = {{up({1, -2, 1}), Sig::EqZero},
                                            {up({-1, 1}), Sig::EqZero}};
    CHECK(decide_exists_order(a4));
    // Constant atoms short-circuit.
    CHECK_FALSE(decide_exists_order<Rational>({{up({-1}), Sig::GtZero}}));
    CHECK(decide_exists_order<Rational>({{up({2}), Sig::GtZero}}));
    CHECK(decide_exists_order<Rational>({}));
    // A narrow open window between roots: 0 < x and 8x < 1.
    std::vector<ExistsAtom<Rational>> a5 = {{up({0, 1}), Sig::GtZero},
                                            {up({1, -8}), Sig::GtZero}};
    CHECK(decide_exists_order(a5));
    // Cubic (bisection path): x^3 - 2x = 0 with x < 0 and x != -2.
    std::vector<ExistsAtom<Rational>> a6 = {{up({0, -2, 0, 1}), Sig::EqZero},
                                            {up({0, -1}), Sig::GtZero},
                                            {up({2, 1}), Sig::NeqZero}};
    CHECK(decide_exists_order(a6));
    // Quartic with no real root.
    std::vector<ExistsAtom<Rational>> a7 = {{up({1, 0, 0, 0, 1}), Sig::EqZero}};
    CHECK_FALSE(decide_exists_order(a7));
    // Strict positivity in a bounded gap, degree 3: x(x-1)(x-2) > 0 on (0,1)
    // and x < 1 forces that gap.
    std::vector<ExistsAtom<Rational>> a8 = {{up({0, 2, -3, 1}), Sig::GtZero},
                                            {up({1, -1}), Sig::GtZero}};
    CHECK(decide_exists_order(a8));
}

TEST_CASE("satisfiability agrees with factored ground truth") {
    // Polynomials built from known linear factors (plus an optional
    // irreducible quadratic) admit an elementary satisfiability decision:
    // walk the regions between sorted roots and track the sign.
    Rng rng(77001);
    int bisection_cases = 0;
    for (int iter = 0; iter < 200; ++iter) {
        long lc = rng.coin() ? rng.range(1, 3) : rng.range(-3, -1);
        UPoly<Rational> p = up({lc});
        std::vector<Rational> roots;        // distinct root values
        std::vector<int> mult;              // multiplicities
        long nlin = rng.range(1, 3);
        for (long i = 0; i < nlin; ++i) {
            long rn = rng.range(-3, 3);
            long rd = rng.range(1, 2);
            Rational r = make_rational(rn, rd);
            p = p * UPoly<Rational>({-r, Rational(1)});
            bool seen = false;
            for (std::size_t j = 0; j < roots.size(); ++j)
                if (roots[j] == r) {
                    ++mult[j];
                    seen = true;
                }
            if (!seen) {
                roots.push_back(r);
                mult.push_back(1);
            }
        }
        if (rng.coin()) p = p * up({1, 0, 1});  // x^2 + 1, no real roots
        if (p.degree() >= 3) ++bisection_cases;

        // Region signs from the right: rightmost region has the sign of lc,
        // and crossing a root of multiplicity m flips it iff m is odd.
        std::vector<std::size_t> order(roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return roots[i] < roots[j]; });
        int s = sign(p.lc());
        bool any_pos = (s > 0), any_neg = (s < 0);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (mult[order[k]] % 2 == 1) s = -s;
            any_pos = any_pos || (s > 0);
            any_neg = any_neg || (s < 0);
        }
        bool truth_eq = !roots.empty();
        bool truth_gt = any_pos;
        bool truth_ge = any_pos || !roots.empty();

        CHECK(decide_exists_order<Rational>({{p, Sig::EqZero}}) == truth_eq);
        CHECK(decide_exists_order<Rational>({{p, Sig::NeqZero}}) == true);
        CHECK(decide_exists_order<Rational>({{p, Sig::GtZero}}) == truth_gt);
        CHECK(decide_exists_order<Rational>({{p, Sig::GeqZero}}) == truth_ge);
        CHECK(decide_exists_order<Rational>({{-p, Sig::GtZero}}) == any_neg);
    }
    CHECK(bisection_cases > 50);  // the general path is actually exercised
}

TEST_CASE("satisfiability of sign conditions over rational functions") {
    const RatFuncElem t = RatFuncElem::t();
    auto P = [&](std::vector<RatFuncElem> cs) { return UPoly<RatFuncElem>(std::move(cs)); };
    // exists x: x^2 <= t, i.e. t - x^2 >= 0 (x = sqrt(t) works).
    CHECK(decide_exists_order<RatFuncElem>({{P({t, rf({0}), rf({-1})}), Sig::GeqZero}}));
    // x^2 <= t and x > 0 and even x > t (sqrt(t) dominates t).
    CHECK(decide_exists_order<RatFuncElem>({{P({t, rf({0}), rf({-1})}), Sig::GeqZero},
                                            {P({rf({0}), rf({1})}), Sig::GtZero},
                                            {P({-t, rf({1})}), Sig::GtZero}}));
    // But not x >= 1: sqrt(t) is infinitesimal.
    CHECK_FALSE(decide_exists_order<RatFuncElem>({{P({t, rf({0}), rf({-1})}), Sig::GeqZero},
                                                  {P({rf({-1}), rf({1})}), Sig::GeqZero}}));

    // Roots at infinitesimal separation: x^2 - 2tx + t^2 - t^3 has roots
    // t +- t^(3/2), both infinitesimally close to t. The quadratic path
    // separates them exactly.
    const UPoly<RatFuncElem> cluster = P({rf({0, 0, 1, -1}), rf({0, -2}), rf({1})});
    CHECK(decide_exists_order<RatFuncElem>({{cluster, Sig::EqZero},
                                            {P({-t, rf({1})}), Sig::GtZero}}));  // root > t
    CHECK(decide_exists_order<RatFuncElem>({{cluster, Sig::EqZero},
                                            {P({t, rf({-1})}), Sig::GtZero}}));  // root < t
    CHECK_FALSE(decide_exists_order<RatFuncElem>({{cluster, Sig::EqZero},
                                                  {P({-t, rf({1})}), Sig::EqZero}}));
    // Between the two cluster roots the polynomial is negative.
    CHECK(decide_exists_order<RatFuncElem>({{cluster, Sig::GtZero}}));
    CHECK(decide_exists_order<RatFuncElem>(
        {{cluster.scaled(rf({-1})), Sig::GtZero}}));

    // Degree 3 forces bisection, whose base-field midpoints can never fall
    // inside an infinitesimal cluster: the budget cap reports that honestly.
    const UPoly<RatFuncElem> cubic_cluster =
        UPoly<RatFuncElem>({-t, rf({1})}) * cluster;  // roots t, t +- t^(3/2)
    CHECK_THROWS_AS(
        decide_exists_order<RatFuncElem>({{cubic_cluster, Sig::EqZero}}), BudgetExceeded);

    // Degree 3 with well-separated roots bisects fine: (x^2 - t)(x - 2) = 0
    // with x > 1 picks the root 2. (The side condition must not introduce
    // new roots infinitesimally close to +-sqrt(t): the bisection product
    // contains the side polynomial's roots too.)
    const UPoly<RatFuncElem> wide =
        UPoly<RatFuncElem>({rf({-2}), rf({1})}) * P({-t, rf({0}), rf({1})});
    CHECK(decide_exists_order<RatFuncElem>({{wide, Sig::EqZero},
                                            {P({rf({-1}), rf({1})}), Sig::GtZero}}));
    // x > 0 instead would put the roots 0 and +-sqrt(t) of the combined
    // product at infinitesimal separation, which bisection cannot split.
    CHECK_THROWS_AS(decide_exists_order<RatFuncElem>(
                        {{wide, Sig::EqZero}, {P({rf({0}), rf({1})}), Sig::GtZero}}),
                    BudgetExceeded);
}

TEST_CASE("newton polygon of truncated-series polynomials") {
    // x^2 - t: single segment of slope -1/2 and length 2.
    NewtonPolygon p1 = newton_polygon({lt(1, {-1}), LaurentElem(), lt(0, {1})});
    CHECK(p1.zero_root_multiplicity == 0);
    REQUIRE(p1.segments.size() == 1);
    CHECK(p1.segments[0].slope == make_rational(-1, 2));
    CHECK(p1.segments[0].length == 2);

    // x^2 - tx: a zero root plus one root of value t.
    NewtonPolygon p2 = newton_polygon({LaurentElem(), lt(1, {-1}), lt(0, {1})});
    CHECK(p2.zero_root_multiplicity == 1);
    REQUIRE(p2.segments.size() == 1);
    CHECK(p2.segments[0].slope == Rational(-1));
    CHECK(p2.segments[0].length == 1);

    // x^3 - t^2 x + t: the point (1, 2) lies above the hull from (0, 1) to
    // (3, 0); one segment of slope -1/3 and length 3.
    NewtonPolygon p3 =
        newton_polygon({lt(1, {1}), lt(2, {-1}), LaurentElem(), lt(0, {1})});
    CHECK(p3.zero_root_multiplicity == 0);
    REQUIRE(p3.segments.size() == 1);
    CHECK(p3.segments[0].slope == make_rational(-1, 3));
    CHECK(p3.segments[0].length == 3);

    // Collinear support points merge into one segment: x^2 - 2tx + t^2.
    NewtonPolygon p4 = newton_polygon({lt(2, {1}), lt(1, {-2}), lt(0, {1})});
    REQUIRE(p4.segments.size() == 1);
    CHECK(p4.segments[0].slope == Rational(-1));
    CHECK(p4.segments[0].length == 2);

    // Two genuine segments: (x - 1)(x - t) = x^2 - (1 + t)x + t.
    NewtonPolygon p5 = newton_polygon({lt(0, {0, 1}), lt(0, {-1, -1}), lt(0, {1})});
    REQUIRE(p5.segments.size() == 2);
    CHECK(p5.segments[0].slope == Rational(-1));
    CHECK(p5.segments[0].length == 1);
    CHECK(p5.segments[1].slope == Rational(0));
    CHECK(p5.segments[1].length == 1);

    // Errors: zero polynomial, and indeterminacy that could move the hull.
    CHECK_THROWS_AS(newton_polygon({LaurentElem(), LaurentElem()}), ZeroPolynomial);
    CHECK_THROWS_AS(newton_polygon({}), ZeroPolynomial);
    const LaurentElem unknown = LaurentElem::make(0, {}, 0);  // O(t^0): sign unknown
    CHECK_THROWS_AS(newton_polygon({unknown, unknown}), PrecisionExhausted);
    // Indeterminate coefficient beyond the known support (could raise the
    // degree).
    CHECK_THROWS_AS(newton_polygon({lt(0, {1}), lt(0, {1}), LaurentElem::make(3, {}, 3)}),
                    PrecisionExhausted);
    // Interior indeterminate coefficient below the hull line.
    CHECK_THROWS_AS(
        newton_polygon({lt(2, {1}), LaurentElem::make(0, {}, 0), lt(0, {1})}),
        PrecisionExhausted);
    // Interior indeterminate coefficient at or above the hull is harmless.
    NewtonPolygon p6 =
        newton_polygon({lt(2, {1}), LaurentElem::make(1, {}, 1), lt(0, {1})});
    REQUIRE(p6.segments.size() == 1);
    CHECK(p6.segments[0].slope == Rational(-1));
    CHECK(p6.segments[0].length == 2);
    NewtonPolygon p7 =
        newton_polygon({lt(2, {1}), LaurentElem::make(2, {}, 2), lt(0, {1})});
    CHECK(p7.segments.size() == 1);
}

TEST_CASE("newton polygon conservation") {
    // Sum of segment lengths plus the zero-root multiplicity equals the
    // degree, and slopes strictly increase left to right.
    Rng rng(90210);
    for (int iter = 0; iter < 300; ++iter) {
        long deg = rng.range(1, 7);
        std::vector<LaurentElem> cs;
        for (long i = 0; i < deg; ++i) {
            if (rng.range(0, 3) == 0) {
                cs.push_back(LaurentElem());  // exact zero
            } else {
                long ord = rng.range(0, 5);
                long c = rng.range(1, 9) * (rng.coin() ? 1 : -1);
                cs.push_back(lt(ord, {c}));
            }
        }
        cs.push_back(lt(rng.range(0, 3), {rng.coin() ? 1 : -1}));  // nonzero lead
        NewtonPolygon np = newton_polygon(cs);
        long covered = np.zero_root_multiplicity;
        for (const auto& s : np.segments) covered += s.length;
        CHECK(covered == deg);
        for (std::size_t k = 1; k < np.segments.size(); ++k)
            CHECK(np.segments[k - 1].slope < np.segments[k].slope);
    }
}

TEST_CASE("hensel lifting of simple residue roots") {
    const LaurentElem one = lt(0, {1});
    // x^2 - (1 + t) from r0 = 1: the square root series.
    std::vector<LaurentElem> sq = {lt(0, {-1, -1}), LaurentElem(), one};
    LaurentElem r = hensel_lift(sq, Rational(1), 4);
    CHECK(r.start() == 0);
    CHECK(r.known_until() == 4);
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(1) == make_rational(1, 2));
    CHECK(r.coeff(2) == make_rational(-1, 8));
    CHECK(r.coeff(3) == make_rational(1, 16));
    // The other residue root gives the negated series.
    LaurentElem rn = hensel_lift(sq, Rational(-1), 4);
    VOrd cancel = (r + rn).vord();
    CHECK(cancel.kind == VOrd::Kind::AtLeast);
    CHECK(cancel.k >= 4);

    // x^2 has only the double residue root 0.
    CHECK_THROWS_AS(hensel_lift({LaurentElem(), LaurentElem(), one}, Rational(0), 4),
                    NotSimpleResidueRoot);
    // Residue must actually vanish.
    CHECK_THROWS_AS(hensel_lift(sq, Rational(2), 4), NotSimpleResidueRoot);

    // x - t lands on the exact root t.
    LaurentElem lin = hensel_lift({lt(1, {-1}), one}, Rational(0), 6);
    CHECK(lin.exact());
    CHECK((lin - LaurentElem::t()).is_zero3() == TruthValue::True);

    // Exact-root landing for higher degree: x^2 - (1 + t)^2 from r0 = 1
    // converges to 1 + t with a known-zero residual at the target precision.
    std::vector<LaurentElem> perfect = {lt(0, {-1, -2, -1}), LaurentElem(), one};
    LaurentElem pr = hensel_lift(perfect, Rational(1), 8);
    CHECK((pr - lt(0, {1, 1})).vord().kind != VOrd::Kind::Known);

    // Precision bookkeeping: truncated inputs below the target are refused.
    std::vector<LaurentElem> low = {LaurentElem::make(0, {Rational(-1), Rational(-1)}, 2),
                                    LaurentElem(), one};
    CHECK_THROWS_AS(hensel_lift(low, Rational(1), 8), PrecisionExhausted);
    // Config and input validation.
    CHECK_THROWS_AS(hensel_lift(sq, Rational(1), 0), InvalidConfig);
    CHECK_THROWS_AS(hensel_lift({LaurentElem(), LaurentElem()}, Rational(0), 4),
                    ZeroPolynomial);
    CHECK_THROWS_AS(hensel_lift({}, Rational(0), 4), ZeroPolynomial);
    CHECK_THROWS_AS(hensel_lift({lt(-1, {1}), one}, Rational(0), 4), Error);
}

TEST_CASE("hensel residual invariant") {
    // Random integral polynomials arranged to have a simple residue root:
    // the lifted root satisfies f(r) = 0 mod t^N.
    Rng rng(5150);
    const long N = 8;
    int lifted = 0;
    for (int iter = 0; iter < 200; ++iter) {
        long deg = rng.range(1, 4);
        std::vector<LaurentElem> cs;
        std::vector<Rational> res;
        for (long i = 0; i <= deg; ++i) {
            long c0 = rng.range(-4, 4);
            long c1 = rng.range(-3, 3);
            long c2 = rng.range(-2, 2);
            cs.push_back(lt(0, {c0, c1, c2}));
            res.push_back(Rational(c0));
        }
        long r0 = rng.range(-2, 2);
        // Shift the constant coefficient so the residue vanishes at r0.
        UPoly<Rational> rbar(res);
        Rational v = rbar.eval(Rational(r0));
        cs[0] = cs[0] - LaurentElem::from_rational(v);
        rbar = rbar - UPoly<Rational>::constant(v);
        if (rbar.is_zero()) continue;
        if (is_zero(rbar.derivative().eval(Rational(r0)))) continue;

        LaurentElem r = hensel_lift(cs, Rational(r0), N);
        CHECK(r.coeff(0) == Rational(r0));
        // Evaluate f at the lifted root.
        LaurentElem acc;
        for (std::size_t i = cs.size(); i-- > 0;) acc = acc * r + cs[i];
        VOrd w = acc.vord();
        bool small = (w.kind == VOrd::Kind::Infinite) ||
                     (w.kind == VOrd::Kind::AtLeast && w.k >= N) ||
                     (w.kind == VOrd::Kind::Known && w.k >= N);
        CHECK(small);
        ++lifted;
    }
    CHECK(lifted > 150);
}

TEST_CASE("sampling equivalence harness") {
    const ModelDescriptor mr = ModelDescriptor::mr();
    const ModelDescriptor ma = ModelDescriptor::ma();

    // Syntactically different but equal formulas pass on both models.
    EquivReport ok = qf_equiv_sample(mr, parse_formula("x*y + 1 = 1 + y*x"),
                                     parse_formula("x*y = y*x"), 100, 7);
    CHECK(ok.pass);
    CHECK(ok.checked == 100);
    CHECK(ok.skipped == 0);
    CHECK(ok.counterexample.empty());

    // Asymmetric orders differ; a counterexample shows up fast.
    EquivReport bad = qf_equiv_sample(mr, parse_formula("x <= y"), parse_formula("y <= x"),
                                      100, 7);
    CHECK_FALSE(bad.pass);
    CHECK(bad.checked <= 100);
    CHECK_FALSE(bad.counterexample.empty());

    // The equivalence relation is intersection of both weak orders: passes on
    // both models.
    for (const ModelDescriptor& m : {mr, ma}) {
        EquivReport sim = qf_equiv_sample(m, parse_formula("x ~ y"),
                                          parse_formula("x <= y & y <= x"), 150, 11);
        CHECK(sim.pass);
        CHECK(sim.checked + sim.skipped == 150);
    }

    // Valuation comparability is total: x <=v y or y <=v x is always true.
    EquivReport tot = qf_equiv_sample(ma, parse_formula("x <=v y | y <=v x"),
                                      parse_formula("x = x & y = y"), 150, 3);
    CHECK(tot.pass);

    // Determinism: identical seeds give identical reports.
    EquivReport r1 = qf_equiv_sample(ma, parse_formula("x*x ~v x"), parse_formula("x ~v 1"),
                                     80, 99);
    EquivReport r2 = qf_equiv_sample(ma, parse_formula("x*x ~v x"), parse_formula("x ~v 1"),
                                     80, 99);
    CHECK(r1.pass == r2.pass);
    CHECK(r1.checked == r2.checked);
    CHECK(r1.counterexample == r2.counterexample);

    // Input validation.
    CHECK_THROWS_AS(qf_equiv_sample(mr, parse_formula("x = 0"), parse_formula("y = 0"), 10, 1),
                    FreeVariableMismatch);
    CHECK_THROWS_AS(
        qf_equiv_sample(mr, parse_formula("E x. x = y"), parse_formula("y = y"), 10, 1),
        Error);
}
