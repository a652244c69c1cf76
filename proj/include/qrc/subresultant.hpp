#pragma once

#include <string>
#include <vector>

#include "qrc/polynomial.hpp"

namespace qrc {

// Signed subresultant sequence of (f, g) with respect to var.
//
// THE sign/scaling convention for the whole project lives here; the
// ACF-branch eliminator and the Sturm oracle both consume this module and
// nothing else defines subresultants. Convention (classical signed
// subresultants): for p = deg f > deg g = q, sres_j(f, g) is the determinant
// polynomial of the Sylvester-Habicht matrix SyHa_j with rows
//     x^(q-j-1) f, ..., x f, f,   g, x g, ..., x^(p-j-1) g
// (f-shifts by descending power, g-shifts by ascending power; the reversed
// g-block carries the classical sign twist) over the columns
// x^(p+q-j-1), ..., x^0. The determinant polynomial of an r x c matrix is
// sum_l det(columns 0..r-2, l) * x^(c-1-l) for l = r-1 .. c-1.
//
// Edge conventions: deg f = deg g reduces g to lc(g) f - lc(f) g first;
// deg f < deg g computes on the swapped pair. Either way `entries` starts
// with the original inputs, continues with the nonzero signed subresultants
// in order of strictly decreasing degree, and ends with one similar to
// gcd(f, g) (up to a content factor over non-rational coefficients).
struct SubresultantChain {
    std::string var;
    std::vector<Polynomial> entries;
};

SubresultantChain subresultant_chain(const Polynomial& f, const Polynomial& g,
                                     const std::string& var);

// sres_j as defined above; j <= min(deg f, deg g) with deg f != deg g.
Polynomial subresultant(unsigned j, const Polynomial& f, const Polynomial& g,
                        const std::string& var);

// Coefficient of var^j in sres_j (vanishing controls gcd degree > j).
Polynomial principal_subresultant(unsigned j, const Polynomial& f,
                                  const Polynomial& g, const std::string& var);

// Classical resultant: determinant of the Sylvester matrix (rows
// x^(n-1) f ... f, x^(m-1) g ... g). Res(f, c) = c^deg f for constant c;
// throws ZeroInput when either argument is the zero polynomial.
Polynomial resultant(const Polynomial& f, const Polynomial& g,
                     const std::string& var);

// Determinant of a square matrix of polynomials (Laplace expansion with
// column-subset memoization; intended for the small matrices above).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

}  // namespace qrc
