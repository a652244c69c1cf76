#include "qrc/oracles.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/rng.hpp"

namespace qrc {

namespace {

template <class F>
F f_abs(const F& x) {
    if (field_sign(x) < 0) return -x;
    return x;
}

// Sign of p just right of a: the first nonzero of p(a), p'(a), p''(a), ...
template <class F>
int sign_right(UPoly<F> p, const F& a) {
    while (!p.is_zero()) {
        int s = field_sign(p.eval(a));
        if (s != 0) return s;
        p = p.derivative();
    }
    return 0;
}

// Sign of p at +infinity (pos) or -infinity (!pos).
template <class F>
int sign_inf(const UPoly<F>& p, bool pos) {
    if (p.is_zero()) return 0;
    int s = field_sign(p.lc());
    if (pos || p.degree() % 2 == 0) return s;
    return -s;
}

// Signed remainder sequence starting from (a, b).
template <class F>
std::vector<UPoly<F>> srs(UPoly<F> a, UPoly<F> b) {
    std::vector<UPoly<F>> seq;
    seq.push_back(std::move(a));
    if (!b.is_zero()) {
        seq.push_back(std::move(b));
        while (true) {
            UPoly<F> r = -(seq[seq.size() - 2] % seq.back());
            if (r.is_zero()) break;
            seq.push_back(std::move(r));
        }
    }
    return seq;
}

// Sign variations of a sequence, zeros skipped.
int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

bool sigma_ok(OrderAtom::Sigma sigma, int s) {
    switch (sigma) {
        case OrderAtom::Sigma::EqZero: return s == 0;
        case OrderAtom::Sigma::NeqZero: return s != 0;
        case OrderAtom::Sigma::GeqZero: return s >= 0;
        case OrderAtom::Sigma::GtZero: return s > 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Exact quadratic-extension path: every root of a degree <= 2 polynomial is
// a + b*sqrt(d) with a, b, d in the base field and d >= 0, and signs of such
// expressions (and of differences of two of them) are decidable by squaring.

template <class F>
struct QuadPoint {
    F a, b, d;  // a + b*sqrt(d), with d >= 0
};

// Sign of a + b*sqrt(d).
template <class F>
int sign1(const F& a, const F& b, const F& d) {
    if (field_sign(b) == 0 || field_sign(d) == 0) return field_sign(a);
    int sa = field_sign(a);
    int sb = field_sign(b);  // sign of b*sqrt(d)
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite nonzero signs: compare a^2 against b^2 d.
    const F diff = a * a - b * b * d;
    return field_sign(diff) * sa;
}

// Sign of A + b1*sqrt(d1) + b2*sqrt(d2).
template <class F>
int sign2(const F& A, const F& b1, const F& d1, const F& b2, const F& d2) {
    if (field_sign(b2) == 0 || field_sign(d2) == 0) return sign1(A, b1, d1);
    if (field_sign(b1) == 0 || field_sign(d1) == 0) return sign1(A, b2, d2);
    int ss = sign1(A, b1, d1);       // sign of S = A + b1*sqrt(d1)
    int st = field_sign(b2);         // sign of T = b2*sqrt(d2)
    if (ss == 0) return st;
    if (ss == st) return ss;
    // S, T nonzero with opposite signs, so sign(S - T) = sign(S) and
    // sign(S + T) = sign(S^2 - T^2) * sign(S - T); the difference of squares
    // is a single-radical expression A^2 + b1^2 d1 - b2^2 d2 + 2 A b1 sqrt(d1).
    const F u = A * A + b1 * b1 * d1 - b2 * b2 * d2;
    const F w = F(2) * A * b1;
    return sign1(u, w, d1) * ss;
}

// Three-way comparison of two quadratic points by value.
template <class F>
int point_cmp(const QuadPoint<F>& p, const QuadPoint<F>& q) {
    const F da = p.a - q.a;
    const F nb = -q.b;
    return sign2(da, p.b, p.d, nb, q.d);
}

// Real roots of a polynomial of degree <= 2, as quadratic points.
template <class F>
std::vector<QuadPoint<F>> quad_roots(const UPoly<F>& p) {
    std::vector<QuadPoint<F>> out;
    if (p.degree() == 1) {
        out.push_back({-p.coeff(0) / p.coeff(1), F(0), F(0)});
    } else if (p.degree() == 2) {
        const F c2 = p.coeff(2);
        const F c1 = p.coeff(1);
        const F c0 = p.coeff(0);
        const F disc = c1 * c1 - F(4) * c2 * c0;
        const F center = -c1 / (F(2) * c2);
        int sd = field_sign(disc);
        if (sd == 0) {
            out.push_back({center, F(0), F(0)});
        } else if (sd > 0) {
            const F w = F(1) / (F(2) * c2);
            out.push_back({center, w, disc});
            out.push_back({center, -w, disc});
        }
    }
    return out;
}

// Sign of p at a quadratic point: Horner over F[sqrt(d)] tracking u + v*sqrt(d).
template <class F>
int sign_at(const UPoly<F>& p, const QuadPoint<F>& pt) {
    F u(0);
    F v(0);
    for (int i = p.degree(); i >= 0; --i) {
        F nu = u * pt.a + v * pt.b * pt.d + p.coeff(static_cast<std::size_t>(i));
        F nv = u * pt.b + v * pt.a;
        u = std::move(nu);
        v = std::move(nv);
    }
    return sign1(u, v, pt.d);
}

// Sign of p just right of a quadratic point, via the derivative chain. Valid
// on the whole open interval up to the next root, however close it is.
template <class F>
int sign_right_at(UPoly<F> p, const QuadPoint<F>& pt) {
    while (!p.is_zero()) {
        int s = sign_at(p, pt);
        if (s != 0) return s;
        p = p.derivative();
    }
    return 0;
}

template <class F>
bool decide_quadratic(const std::vector<ExistsAtom<F>>& atoms) {
    std::vector<QuadPoint<F>> roots;
    for (const auto& a : atoms)
        for (auto& r : quad_roots(a.p)) roots.push_back(std::move(r));
    std::sort(roots.begin(), roots.end(),
              [](const QuadPoint<F>& x, const QuadPoint<F>& y) { return point_cmp(x, y) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const QuadPoint<F>& x, const QuadPoint<F>& y) {
                                return point_cmp(x, y) == 0;
                            }),
                roots.end());

    auto ok_all = [&](auto&& sign_of) {
        for (const auto& a : atoms)
            if (!sigma_ok(a.sigma, sign_of(a.p))) return false;
        return true;
    };

    if (roots.empty()) {
        // Every atom polynomial has constant sign; one sample settles it.
        const F zero(0);
        return ok_all([&](const UPoly<F>& p) { return field_sign(p.eval(zero)); });
    }
    if (ok_all([&](const UPoly<F>& p) { return sign_inf(p, false); })) return true;
    if (ok_all([&](const UPoly<F>& p) { return sign_inf(p, true); })) return true;
    for (const auto& r : roots) {
        if (ok_all([&](const UPoly<F>& p) { return sign_at(p, r); })) return true;
        if (ok_all([&](const UPoly<F>& p) { return sign_right_at(p, r); })) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// General path: isolate the roots of the product polynomial by bisection on
// base-field midpoints, then test each root cell by Tarski query and each gap
// by a base-field sample point. Root clusters closer than any base-field
// element (possible over Q(t)) cannot be split this way; the depth cap turns
// that into BudgetExceeded instead of divergence.

template <class F>
struct Cell {
    F lo, hi;  // half-open (lo, hi], exactly one root of the product inside
};

constexpr int kDepthCap = 64;

template <class F>
struct Isolator {
    const UPoly<F>& poly;
    const UPoly<F>& one;
    std::vector<Cell<F>>& cells;

    void run(const F& lo, const F& hi, long count, int depth) {
        if (count == 0) return;
        if (count == 1) {
            cells.push_back({lo, hi});
            return;
        }
        if (depth >= kDepthCap)
            throw BudgetExceeded("root isolation: bisection depth cap reached");
        F mid = (lo + hi) / F(2);
        long left = sturm_tarski(poly, one, std::optional<F>(lo), std::optional<F>(mid));
        run(lo, mid, left, depth + 1);
        run(mid, hi, count - left, depth + 1);
    }
};

template <class F>
bool decide_bisection(const std::vector<ExistsAtom<F>>& atoms) {
    std::vector<UPoly<F>> polys;
    for (const auto& a : atoms) {
        bool seen = false;
        for (const auto& q : polys)
            if (q == a.p) {
                seen = true;
                break;
            }
        if (!seen) polys.push_back(a.p);
    }
    UPoly<F> prod = UPoly<F>::constant(F(1));
    for (const auto& q : polys) prod = prod * q;
    const UPoly<F> P = squarefree_part(prod);
    const UPoly<F> one = UPoly<F>::constant(F(1));

    auto test_at = [&](const F& x) {
        for (const auto& a : atoms)
            if (!sigma_ok(a.sigma, field_sign(a.p.eval(x)))) return false;
        return true;
    };

    long total = sturm_tarski<F>(P, one, std::nullopt, std::nullopt);
    if (total == 0) return test_at(F(0));

    // Strict root bound: |r| < B for every root r of P.
    F bound(1);
    {
        const F lead = f_abs(P.lc());
        F m(0);
        for (int i = 0; i < P.degree(); ++i) {
            F c = f_abs(P.coeff(static_cast<std::size_t>(i))) / lead;
            if (field_sign(c - m) > 0) m = std::move(c);
        }
        bound = F(1) + m;
    }

    std::vector<Cell<F>> cells;
    Isolator<F>{P, one, cells}.run(-bound, bound, total, 0);

    // Outside the root hull.
    if (test_at(-bound)) return true;
    if (test_at(bound)) return true;
    // At each root: with one root in the cell, the Tarski query for an atom
    // polynomial is exactly its sign at that root.
    for (const auto& c : cells) {
        bool all = true;
        for (const auto& a : atoms) {
            long s = sturm_tarski(P, a.p, std::optional<F>(c.lo), std::optional<F>(c.hi));
            if (!sigma_ok(a.sigma, static_cast<int>(s))) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    // In each open gap between consecutive roots.
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        F x = cells[i].hi;
        if (field_sign(P.eval(x)) == 0) {
            // The cell's root sits exactly on the sample point; shrink the
            // next cell until a root-free prefix provides one.
            F lo2 = cells[i + 1].lo;
            F hi2 = cells[i + 1].hi;
            bool found = false;
            for (int guard = 0; guard < kDepthCap; ++guard) {
                F mid2 = (lo2 + hi2) / F(2);
                long c2 = sturm_tarski(P, one, std::optional<F>(lo2), std::optional<F>(mid2));
                if (c2 == 0) {
                    x = std::move(mid2);
                    found = true;
                    break;
                }
                hi2 = std::move(mid2);
            }
            if (!found) throw BudgetExceeded("gap sampling: bisection depth cap reached");
        }
        if (test_at(x)) return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
    if (f.degree() <= 1) return f;
    UPoly<F> g = upoly_gcd(f, f.derivative());
    if (g.degree() <= 0) return f;
    return f.div_exact(g);
}

template <class F>
long sturm_tarski(const UPoly<F>& f, const UPoly<F>& g, const std::optional<F>& lo,
                  const std::optional<F>& hi) {
    if (f.is_zero()) throw ZeroPolynomial("Tarski query on the zero polynomial");
    const UPoly<F> fs = squarefree_part(f);
    if (fs.degree() <= 0) return 0;
    const std::vector<UPoly<F>> seq = srs(fs, fs.derivative() * g);

    auto end_variations = [&](const std::optional<F>& at, bool pos) {
        std::vector<int> signs;
        signs.reserve(seq.size());
        for (const auto& p : seq)
            signs.push_back(at ? sign_right(p, *at) : sign_inf(p, pos));
        return variations(signs);
    };
    return end_variations(lo, false) - end_variations(hi, true);
}

template <class F>
bool decide_exists_order(const std::vector<ExistsAtom<F>>& atoms) {
    std::vector<ExistsAtom<F>> work;
    int maxdeg = 0;
    for (const auto& a : atoms) {
        if (a.p.degree() <= 0) {
            // Constant atoms hold everywhere or nowhere.
            int s = a.p.is_zero() ? 0 : field_sign(a.p.lc());
            if (!sigma_ok(a.sigma, s)) return false;
            continue;
        }
        maxdeg = std::max(maxdeg, a.p.degree());
        work.push_back(a);
    }
    if (work.empty()) return true;
    if (maxdeg <= 2) return decide_quadratic(work);
    return decide_bisection(work);
}

template UPoly<Rational> squarefree_part<Rational>(const UPoly<Rational>&);
template UPoly<RatFuncElem> squarefree_part<RatFuncElem>(const UPoly<RatFuncElem>&);
template long sturm_tarski<Rational>(const UPoly<Rational>&, const UPoly<Rational>&,
                                     const std::optional<Rational>&,
                                     const std::optional<Rational>&);
template long sturm_tarski<RatFuncElem>(const UPoly<RatFuncElem>&, const UPoly<RatFuncElem>&,
                                        const std::optional<RatFuncElem>&,
                                        const std::optional<RatFuncElem>&);
template bool decide_exists_order<Rational>(const std::vector<ExistsAtom<Rational>>&);
template bool decide_exists_order<RatFuncElem>(const std::vector<ExistsAtom<RatFuncElem>>&);

// ---------------------------------------------------------------------------

NewtonPolygon newton_polygon(const std::vector<LaurentElem>& coeffs) {
    struct Pt {
        long x, y;
    };
    std::vector<Pt> det;    // (index, exact valuation)
    std::vector<Pt> indet;  // (index, lower bound on the valuation)
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        switch (coeffs[i].is_zero3()) {
            case TruthValue::True:
                break;  // valuation infinite; never on the lower hull
            case TruthValue::False:
                det.push_back({static_cast<long>(i), coeffs[i].start()});
                break;
            case TruthValue::Indeterminate:
                indet.push_back({static_cast<long>(i), coeffs[i].known_until()});
                break;
        }
    }
    if (det.empty()) {
        if (!indet.empty())
            throw PrecisionExhausted("newton polygon: no coefficient is known nonzero");
        throw ZeroPolynomial("newton polygon of the zero polynomial");
    }
    const long lo_x = det.front().x;
    const long hi_x = det.back().x;
    for (const auto& q : indet)
        if (q.x < lo_x || q.x > hi_x)
            throw PrecisionExhausted(
                "newton polygon: indeterminate coefficient outside the known support");

    // Lower hull, monotone chain over x-sorted points.
    auto cross = [](const Pt& a, const Pt& b, const Pt& c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    };
    std::vector<Pt> hull;
    for (const auto& p : det) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    // An indeterminate coefficient is safe only when its valuation bound
    // already places it on or above the hull.
    for (const auto& q : indet) {
        std::size_t k = 1;
        while (k < hull.size() && hull[k].x < q.x) ++k;
        const Pt& a = hull[k - 1];
        const Pt& b = hull[k];
        const Rational hull_y =
            Rational(a.y) + make_rational(b.y - a.y, b.x - a.x) * Rational(q.x - a.x);
        if (Rational(q.y) < hull_y)
            throw PrecisionExhausted(
                "newton polygon: indeterminate coefficient could dip below the hull");
    }

    NewtonPolygon out;
    out.zero_root_multiplicity = lo_x;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        NewtonSegment seg;
        seg.slope = make_rational(hull[k].y - hull[k - 1].y, hull[k].x - hull[k - 1].x);
        seg.length = hull[k].x - hull[k - 1].x;
        out.segments.push_back(std::move(seg));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

LaurentElem horner_series(const std::vector<LaurentElem>& cs, const LaurentElem& x) {
    LaurentElem acc;  // exact zero
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
    return acc;
}

std::vector<LaurentElem> series_derivative(const std::vector<LaurentElem>& cs) {
    std::vector<LaurentElem> out;
    for (std::size_t i = 1; i < cs.size(); ++i)
        out.push_back(cs[i] * LaurentElem::from_rational(Rational(static_cast<long>(i))));
    return out;
}

}  // namespace

LaurentElem hensel_lift(const std::vector<LaurentElem>& coeffs, const Rational& r0,
                        long precision) {
    if (precision <= 0) throw InvalidConfig("hensel lift: precision must be positive");
    bool known_nonzero = false;
    bool all_known_zero = true;
    for (const auto& c : coeffs) {
        if (c.is_zero3() == TruthValue::False) known_nonzero = true;
        if (c.is_zero3() != TruthValue::True) all_known_zero = false;
    }
    if (coeffs.empty() || all_known_zero)
        throw ZeroPolynomial("hensel lift of the zero polynomial");
    if (!known_nonzero)
        throw PrecisionExhausted("hensel lift: no coefficient is known nonzero");
    for (const auto& c : coeffs) {
        VOrd v = c.vord();
        if (v.kind == VOrd::Kind::Known && v.k < 0)
            throw Error("hensel lift: coefficient with negative order");
        if (v.kind == VOrd::Kind::AtLeast && v.k < 0)
            throw PrecisionExhausted("hensel lift: coefficient order not known nonnegative");
    }

    // Residue polynomial at t = 0 and the simple-root requirements.
    std::vector<Rational> res;
    res.reserve(coeffs.size());
    for (const auto& c : coeffs) res.push_back(c.coeff(0));
    const UPoly<Rational> rbar{std::move(res)};
    if (!is_zero(rbar.eval(r0)))
        throw NotSimpleResidueRoot("residue polynomial does not vanish at the given root");
    if (is_zero(rbar.derivative().eval(r0)))
        throw NotSimpleResidueRoot("residue derivative vanishes at the given root");

    const std::vector<LaurentElem> dcs = series_derivative(coeffs);
    LaurentElem r = LaurentElem::from_rational(r0);
    long iters = 1;
    while ((1L << iters) < precision + 2) ++iters;
    ++iters;
    for (long k = 0; k < iters; ++k) {
        LaurentElem fr = horner_series(coeffs, r);
        if (fr.is_zero3() == TruthValue::True) return r;  // landed on an exact root
        LaurentElem dfr = horner_series(dcs, r);
        if (!dfr.exact()) dfr = dfr.truncated(precision);
        LaurentElem q = fr * dfr.recip(precision);
        LaurentElem next = r - q;
        r = next.exact() ? next : next.truncated(precision);
    }
    LaurentElem fr = horner_series(coeffs, r);
    if (fr.is_zero3() == TruthValue::True) return r;
    VOrd v = fr.vord();
    if (v.kind == VOrd::Kind::Known && v.k < precision)
        throw Error("hensel lift: iteration failed to converge");
    if (v.kind == VOrd::Kind::AtLeast && v.k < precision)
        throw PrecisionExhausted("hensel lift: input precision too low for the target");
    return r.truncated(precision);
}

// ---------------------------------------------------------------------------

EquivReport qf_equiv_sample(const ModelDescriptor& m, const FormulaPtr& phi,
                            const FormulaPtr& psi, long n, std::uint64_t seed) {
    if (!is_quantifier_free(phi) || !is_quantifier_free(psi))
        throw Error("sampling equivalence requires quantifier-free formulas");
    const auto fv = free_vars(phi);
    if (fv != free_vars(psi))
        throw FreeVariableMismatch("sampling equivalence: free variable sets differ");
    const std::vector<std::string> vars(fv.begin(), fv.end());

    EquivReport rep;
    Rng rng(seed);
    for (long i = 0; i < n; ++i) {
        bool settled = false;
        for (int attempt = 0; attempt < 4 && !settled; ++attempt) {
            ModelDescriptor md = m;
            md.precision = m.precision << attempt;
            Assignment env;
            for (const auto& v : vars) {
                ModelElem e = sample_elem(md, rng, 2);
                env.emplace(v, std::move(e));
            }
            TruthValue a = eval_qf(md, phi, env);
            TruthValue b = eval_qf(md, psi, env);
            if (!is_det(a) || !is_det(b)) continue;
            settled = true;
            ++rep.checked;
            if (a != b) {
                rep.pass = false;
                std::string s;
                for (const auto& [name, val] : env) {
                    if (!s.empty()) s += ", ";
                    s += name + " = " + elem_str(val);
                }
                rep.counterexample = std::move(s);
                return rep;
            }
        }
        if (!settled) ++rep.skipped;
    }
    return rep;
}

}  // namespace qrc
