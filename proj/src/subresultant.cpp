#include "qrc/subresultant.hpp"

#include <unordered_map>

#include "qrc/errors.hpp"

namespace qrc {

namespace {

// Coefficient row of x^shift * p over columns x^(cols-1) ... x^0.
std::vector<Polynomial> shifted_row(const std::vector<Polynomial>& coeffs,
                                    unsigned shift, std::size_t cols) {
    std::vector<Polynomial> row(cols);
    // coeffs[i] is the coefficient of x^i; x^shift * p has coefficient
    // coeffs[i] at x^(i+shift), which sits in column cols-1-(i+shift).
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::size_t deg = i + shift;
        row[cols - 1 - deg] = coeffs[i];
    }
    return row;
}

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m,
                   std::size_t row, unsigned avail,
                   std::unordered_map<unsigned, Polynomial>& memo) {
    const std::size_t n = m.size();
    if (row == n) return Polynomial::integer(1);
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    Polynomial acc;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        if (!(avail & (1u << col))) continue;
        if (!m[row][col].is_zero()) {
            Polynomial sub =
                det_rec(m, row + 1, avail & ~(1u << col), memo);
            Polynomial term = m[row][col] * sub;
            acc += negate ? -term : term;
        }
        negate = !negate;
    }
    memo.emplace(avail, acc);
    return acc;
}

// Determinant polynomial: sum_l det(cols 0..r-2, l) * x^(c-1-l), l >= r-1.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m,
                    std::size_t cols, const std::string& var) {
    const std::size_t rows = m.size();
    Polynomial out;
    const Polynomial x = Polynomial::variable(var);
    for (std::size_t l = rows - 1; l < cols; ++l) {
        std::vector<std::vector<Polynomial>> sq(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            sq[i].reserve(rows);
            for (std::size_t j = 0; j + 1 < rows; ++j) sq[i].push_back(m[i][j]);
            sq[i].push_back(m[i][l]);
        }
        Polynomial d = poly_det(sq);
        if (!d.is_zero()) out += d * x.pow(static_cast<unsigned>(cols - 1 - l));
    }
    return out;
}

// Core sres_j for deg f = p > deg g = q, 0 <= j < q (and j = q handled by
// callers as g itself).
Polynomial sres_core(unsigned j, const std::vector<Polynomial>& fc,
                     const std::vector<Polynomial>& gc,
                     const std::string& var) {
    const unsigned p = static_cast<unsigned>(fc.size()) - 1;
    const unsigned q = static_cast<unsigned>(gc.size()) - 1;
    const std::size_t cols = p + q - j;
    std::vector<std::vector<Polynomial>> m;
    m.reserve(p + q - 2 * j);
    for (unsigned s = q - j; s-- > 0;) m.push_back(shifted_row(fc, s, cols));
    for (unsigned s = 0; s < p - j; ++s) m.push_back(shifted_row(gc, s, cols));
    return det_poly(m, cols, var);
}

}  // namespace

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) return Polynomial::integer(1);
    if (m.size() > 31) throw Error("poly_det: matrix too large");
    std::unordered_map<unsigned, Polynomial> memo;
    return det_rec(m, 0, (1u << m.size()) - 1u, memo);
}

Polynomial subresultant(unsigned j, const Polynomial& f, const Polynomial& g,
                        const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw ZeroInput("subresultant of zero polynomial");
    const auto fc = f.coeffs_in(var), gc = g.coeffs_in(var);
    const unsigned p = f.degree(var), q = g.degree(var);
    if (p == q) throw Error("subresultant: degrees must differ");
    if (j > std::min(p, q)) throw Error("subresultant: index out of range");
    if (p > q) {
        if (j == q) return g;
        return sres_core(j, fc, gc, var);
    }
    if (j == p) return f;
    return sres_core(j, gc, fc, var);
}

Polynomial principal_subresultant(unsigned j, const Polynomial& f,
                                  const Polynomial& g, const std::string& var) {
    const Polynomial s = subresultant(j, f, g, var);
    const auto cs = s.coeffs_in(var);
    return cs.size() > j ? cs[j] : Polynomial();
}

Polynomial resultant(const Polynomial& f, const Polynomial& g,
                     const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw ZeroInput("resultant of zero polynomial");
    const auto fc = f.coeffs_in(var), gc = g.coeffs_in(var);
    const unsigned m = f.degree(var), n = g.degree(var);
    if (m == 0 && n == 0) return Polynomial::integer(1);
    const std::size_t cols = m + n;
    std::vector<std::vector<Polynomial>> mat;
    mat.reserve(cols);
    for (unsigned s = n; s-- > 0;) mat.push_back(shifted_row(fc, s, cols));
    for (unsigned s = m; s-- > 0;) mat.push_back(shifted_row(gc, s, cols));
    return poly_det(mat);
}

SubresultantChain subresultant_chain(const Polynomial& f, const Polynomial& g,
                                     const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw ZeroInput("subresultant_chain of zero polynomial");
    SubresultantChain chain;
    chain.var = var;
    chain.entries = {f, g};

    // Reduce to a pair with strictly decreasing degrees, appending any
    // intermediate polynomial the reduction introduces.
    Polynomial a = f, b = g;
    if (a.degree(var) < b.degree(var)) std::swap(a, b);
    while (!b.is_zero() && a.degree(var) == b.degree(var)) {
        Polynomial c = b.lc_in(var) * a - a.lc_in(var) * b;
        a = b;
        b = c;
        if (!b.is_zero()) chain.entries.push_back(b);
    }
    // When the inputs arrived in swapped order the reduced pair's second
    // element is the *first* input; re-enter it so the chain still ends at
    // the gcd level even if every lower subresultant vanishes.
    if (!b.is_zero() && !(chain.entries.back() == b)) chain.entries.push_back(b);
    if (b.is_zero() || b.degree(var) == 0) return chain;

    const auto ac = a.coeffs_in(var), bc = b.coeffs_in(var);
    unsigned prev_deg = b.degree(var);
    for (unsigned j = b.degree(var); j-- > 0;) {
        Polynomial s = sres_core(j, ac, bc, var);
        if (s.is_zero()) continue;
        if (s.degree(var) >= prev_deg) continue;  // defective duplicate
        chain.entries.push_back(s);
        prev_deg = s.degree(var);
    }
    return chain;
}

}  // namespace qrc
